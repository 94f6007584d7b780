#include <doctest.h>

#include <set>

#include "dpk/alexander.hpp"

using namespace dpk;

namespace {

SequenceTables tables_for(std::int64_t p, std::int64_t q, std::int64_t k) {
    return compute_tables(validate_triple(p, q, k));
}

const LaurentPoly kTrefoilDelta{{0, 1}, {1, -1}, {2, 1}};
const LaurentPoly kPretzelDelta{{0, 1}, {1, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}, {7, 1}, {9, -1}, {10, 1}};

}  // namespace

TEST_CASE("F(t) formula") {
    CHECK(f_formula(tables_for(5, 4, 2)) == LaurentPoly{{-5, 1}, {-8, 1}});
    LaurentPoly f18 = f_formula(tables_for(18, 5, 7));
    LaurentPoly expected{{-23, 1}, {-18, 1}, {-10, 1}, {-15, 1}, {-20, 1}, {-7, 1}, {-12, 1}};
    CHECK(f18 == expected);
    CHECK(f_formula(tables_for(7, 2, 3)) == LaurentPoly{{-3, 1}, {-5, 1}, {-7, 1}});
}

TEST_CASE("closed forms F_X and F_Y") {
    SequenceTables t = tables_for(5, 4, 2);
    CHECK(f_x_closed(t) == LaurentPoly{{0, 1}, {-2, 1}, {-3, 1}, {-4, 1}, {-6, 1}});
    CHECK(f_y_closed(t) == LaurentPoly{{-5, 1}, {-8, 1}});

    // k = 1: the only hit is i_1 = p with c(p) = 0.
    CHECK(f_y_closed(tables_for(7, 3, 1)) == LaurentPoly::term(-7));
}

TEST_CASE("Alexander polynomial of the worked examples") {
    CHECK(alexander_polynomial(tables_for(5, 4, 2)) == kTrefoilDelta);
    CHECK(alexander_polynomial(tables_for(18, 5, 7)) == kPretzelDelta);
    CHECK(alexander_polynomial(tables_for(7, 2, 3)) == kTrefoilDelta);
}

TEST_CASE("genus") {
    CHECK(genus(kTrefoilDelta) == 1);
    CHECK(genus(kPretzelDelta) == 5);
    CHECK(genus(LaurentPoly(1)) == 0);
    CHECK_THROWS_AS(genus(LaurentPoly{{0, 1}, {1, 1}}), OddSpan);
    CHECK_THROWS_AS(genus(LaurentPoly{}), LaurentError);
}

TEST_CASE("form decomposition") {
    FormDecomposition f = form_decomposition(kPretzelDelta);
    REQUIRE(f.ok);
    CHECK(f.m_count == 4);
    CHECK(f.n_seq == std::vector<std::int64_t>{1, 2, 4, 5});
    CHECK(canonicalize(f.reconstruct()) == kPretzelDelta);

    f = form_decomposition(kTrefoilDelta);
    REQUIRE(f.ok);
    CHECK(f.m_count == 1);
    CHECK(f.n_seq == std::vector<std::int64_t>{1});

    f = form_decomposition(LaurentPoly(1));
    REQUIRE(f.ok);
    CHECK(f.m_count == 0);
    CHECK(f.n_seq.empty());
}

TEST_CASE("form decomposition rejections") {
    CHECK(form_decomposition(LaurentPoly{}).fault == FormFault::ZeroPolynomial);
    CHECK(form_decomposition(LaurentPoly{{0, 1}, {1, 1}}).fault == FormFault::OddSpan);
    CHECK(form_decomposition(LaurentPoly{{0, 2}, {1, 1}, {2, 2}}).fault == FormFault::CoefficientNotUnit);
    CHECK(form_decomposition(LaurentPoly{{0, 1}, {1, 1}, {2, -1}}).fault == FormFault::NotReciprocal);
    CHECK(form_decomposition(LaurentPoly{{-1, 1}, {1, 1}}).fault == FormFault::EvenTermCount);
    CHECK(form_decomposition(LaurentPoly{{0, 1}, {1, 1}, {2, 1}}).fault == FormFault::NotAlternating);
}

TEST_CASE("structure analysis for (5,4,2)") {
    StructureReport r = structure_analysis(tables_for(5, 4, 2));
    CHECK(r.d_min == -6);
    CHECK(r.e_min == -8);
    REQUIRE(r.entries.size() == 2);
    std::set<std::pair<std::int64_t, std::int64_t>> dm;
    for (const auto& e : r.entries) dm.insert({e.d, e.m});
    CHECK(dm == std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 1}});
    REQUIRE(r.excess_partition.count(1) == 1);
    CHECK(r.excess_partition.at(1) == std::vector<std::int64_t>{5});
    CHECK(r.ell == 1);
    CHECK(r.product_form == kTrefoilDelta);
    CHECK(r.w1_only);
}

TEST_CASE("structure analysis for k = 1 is trivial") {
    StructureReport r = structure_analysis(tables_for(9, 2, 1));
    for (const auto& e : r.entries) CHECK(e.m == 0);
    CHECK(r.excess_partition.empty());
    CHECK(r.ell == 0);
    CHECK(r.product_form == LaurentPoly(1));
}

TEST_CASE("structure analysis for (18,5,7) matches the Alexander polynomial") {
    StructureReport r = structure_analysis(tables_for(18, 5, 7));
    CHECK(r.product_form == kPretzelDelta);
    CHECK(r.d_min == r.e_min + 7);
}

TEST_CASE("whole-module invariants swept over small triples") {
    for (std::int64_t p = 2; p <= 35; ++p)
        for (std::int64_t q = 1; q < p; ++q)
            for (std::int64_t k = 1; k < p; ++k) {
                TripleFault fault;
                if (!classify_triple(p, q, k, fault)) continue;
                SequenceTables t = compute_tables(SurgeryTriple{p, q, k});

                LaurentPoly f = f_formula(t);
                CHECK(f.term_count() == static_cast<std::size_t>(k));
                CHECK(f.coeff(-p) == 1);  // the i = 0 term
                CHECK(f == f_y_closed(t));

                // Exponents of F_Y cover every residue mod k exactly once.
                std::set<std::int64_t> residues;
                for (const auto& [e, c] : f.terms()) residues.insert(((e % k) + k) % k);
                CHECK(residues.size() == static_cast<std::size_t>(k));

                LaurentPoly delta = alexander_polynomial(t);
                Int at_one = delta.evaluate_at_one();
                CHECK((at_one == 1 || at_one == -1));
                CHECK(canonicalize(delta.reversed()) == delta);  // reciprocity

                StructureReport r = structure_analysis(t);
                CHECK(r.d_min == r.e_min + k);
                std::set<std::int64_t> dvals;
                bool some_m_zero = false;
                for (const auto& ent : r.entries) {
                    dvals.insert(ent.d);
                    some_m_zero = some_m_zero || ent.m == 0;
                }
                CHECK(dvals.size() == static_cast<std::size_t>(k));
                CHECK(*dvals.begin() == 0);
                CHECK(*dvals.rbegin() == k - 1);
                CHECK(some_m_zero);
                CHECK(r.ell <= k - 1);
            }
}
