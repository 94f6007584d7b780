#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "dpk/enumerate.hpp"

using namespace dpk;

TEST_CASE("empty searches") {
    SearchOptions opts;
    opts.p_max = 1;
    CHECK(search(opts).empty());
}

TEST_CASE("saito-filtered search up to p = 5 contains the trefoil triple") {
    SearchOptions opts;
    opts.p_max = 5;
    opts.filter = SearchFilter::SaitoOnly;
    auto records = search(opts);
    bool found = false;
    for (const auto& r : records) {
        CHECK(r.saito_pass);
        if (r.p == 5 && r.q == 4 && r.k == 2) {
            found = true;
            CHECK(r.delta == LaurentPoly{{0, 1}, {1, -1}, {2, 1}});
            CHECK(r.genus == 1);
            CHECK(r.form_pass);
            CHECK(r.n_seq == std::vector<std::int64_t>{1});
        }
    }
    CHECK(found);
}

TEST_CASE("search up to p = 20 contains the pretzel triple with genus 5") {
    SearchOptions opts;
    opts.p_max = 20;
    opts.filter = SearchFilter::SaitoOnly;
    opts.oracle_limit = 20;
    bool found = false;
    for (const auto& r : search(opts)) {
        if (r.p == 18 && r.q == 5 && r.k == 7) {
            found = true;
            CHECK(r.genus == 5);
            CHECK(r.oracle == CheckStatus::Pass);
        }
    }
    CHECK(found);
}

TEST_CASE("record invariants and ordering on a full search") {
    SearchOptions opts;
    opts.p_max = 16;
    opts.oracle_limit = 16;
    auto records = search(opts);
    REQUIRE(!records.empty());
    for (std::size_t i = 1; i < records.size(); ++i) {
        auto key = [](const CatalogRecord& r) { return std::tuple(r.p, r.q, r.k); };
        CHECK(key(records[i - 1]) < key(records[i]));
    }
    for (const auto& r : records) {
        CHECK(r.divisibility == CheckStatus::Pass);
        CHECK(r.cross_check == CheckStatus::Pass);
        CHECK(r.oracle == CheckStatus::Pass);
        CHECK(r.structure == CheckStatus::Pass);
        Int at_one = r.delta.evaluate_at_one();
        CHECK((at_one == 1 || at_one == -1));
        CHECK(r.formal_genus == !r.saito_pass);
        // Theorem 1.2 applies whenever the Saito condition holds.
        if (r.saito_pass) CHECK(r.form_pass);
        if (r.form_pass)
            for (const auto& [e, c] : r.delta.terms()) CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("oracle is skipped above the limit") {
    SearchOptions opts;
    opts.p_max = 8;
    opts.oracle_limit = 5;
    for (const auto& r : search(opts)) {
        if (r.p > 5)
            CHECK(r.oracle == CheckStatus::Skipped);
        else
            CHECK(r.oracle == CheckStatus::Pass);
    }
}

TEST_CASE("search output is reproducible") {
    SearchOptions opts;
    opts.p_max = 12;
    auto dump = [&] {
        std::ostringstream os;
        search(opts, [&](const CatalogRecord& r) { os << to_jsonl(r) << "\n"; });
        return os.str();
    };
    std::string a = dump();
    opts.threads = 3;
    CHECK(a == dump());
}

TEST_CASE("jsonl record round-trips through the schema") {
    SearchOptions opts;
    opts.p_max = 5;
    auto records = search(opts);
    REQUIRE(!records.empty());
    for (const auto& rec : records) {
        auto j = nlohmann::json::parse(to_jsonl(rec));
        CHECK(j["p"] == rec.p);
        CHECK(j["q"] == rec.q);
        CHECK(j["k"] == rec.k);
        CHECK(j["saito_value"] == rec.saito_value);
        CHECK(j["genus"] == rec.genus);
        CHECK(j["delta"]["min_exp"] == 0);
        std::vector<std::int64_t> coeffs = j["delta"]["coeffs"];
        LaurentPoly rebuilt;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            rebuilt.set_coeff(static_cast<Exp>(i) + j["delta"]["min_exp"].get<Exp>(), coeffs[i]);
        CHECK(rebuilt == rec.delta);
        CHECK(j["checks"]["divisibility"] == "pass");
    }
}

TEST_CASE("w1 scan") {
    W1ScanReport empty = scan_w1(1);
    CHECK(empty.scanned == 0);
    CHECK(empty.counterexample_count == 0);

    W1ScanReport r = scan_w1(5);
    CHECK(r.scanned > 0);
    CHECK(r.counterexample_count == 0);
}

TEST_CASE("w1 scan agrees with full structure analysis up to p = 30") {
    // Cross-check the fast c-array scan against the ell computed from the
    // structure report.
    std::int64_t slow_count = 0, scanned = 0, slow_saito = 0, slow_saito_ce = 0;
    for (std::int64_t p = 2; p <= 30; ++p)
        for (std::int64_t q = 1; q < p; ++q)
            for (std::int64_t k = 1; k < p; ++k) {
                TripleFault fault;
                if (!classify_triple(p, q, k, fault)) continue;
                ++scanned;
                SequenceTables t = compute_tables(SurgeryTriple{p, q, k});
                bool saito = saito_condition(t).passes;
                if (saito) ++slow_saito;
                StructureReport sr = structure_analysis(t);
                if (!sr.w1_only) {
                    ++slow_count;
                    if (saito) ++slow_saito_ce;
                }
            }
    W1ScanReport fast = scan_w1(30);
    CHECK(fast.scanned == scanned);
    CHECK(fast.counterexample_count == slow_count);
    CHECK(fast.saito_scanned == slow_saito);
    CHECK(fast.saito_counterexample_count == slow_saito_ce);
}

TEST_CASE("saito-passing triples with excess beyond W(1) exist from p = 25") {
    // (25,4,11) passes the Saito condition yet has ell = 2; the condition
    // does not certify an actual doubly primitive knot, so this is an
    // observation the scan must surface, not suppress.
    CHECK(scan_w1(24).saito_counterexample_count == 0);
    W1ScanReport r = scan_w1(25);
    CHECK(r.saito_counterexample_count > 0);
    bool listed = false;
    for (const auto& t : r.counterexamples) listed = listed || (t.p == 25 && t.q == 4 && t.k == 11);
    CHECK(listed);

    SequenceTables t = compute_tables(validate_triple(25, 4, 11));
    CHECK(saito_condition(t).passes);
    StructureReport sr = structure_analysis(t);  // identities must still hold
    CHECK_FALSE(sr.w1_only);
    CHECK(sr.ell == 2);
}
