#include "dpk/alexander.hpp"

#include <algorithm>

namespace dpk {

LaurentPoly f_formula(const SequenceTables& tables) {
    const auto [p, q, k] = tables.triple;
    LaurentPoly f;
    for (std::int64_t i = 0; i < k; ++i) f.set_coeff(tables.phi[i] * p - tables.psi[i] * k, 1);
    return f;
}

LaurentPoly f_x_closed(const SequenceTables& tables) {
    LaurentPoly f;
    for (std::int64_t i = 1; i <= tables.triple.p; ++i) f.set_coeff(tables.c_val[i], f.coeff(tables.c_val[i]) + 1);
    return f;
}

LaurentPoly f_y_closed(const SequenceTables& tables) {
    LaurentPoly f;
    for (std::int64_t ij : tables.hit_indices) f.set_coeff(tables.c_val[ij] - tables.triple.p, 1);
    return f;
}

LaurentPoly alexander_polynomial(const SequenceTables& tables) {
    const auto [p, q, k] = tables.triple;
    LaurentPoly delta = canonicalize(divide_bracket(f_y_closed(tables), k));
    LaurentPoly via_x = canonicalize(divide_bracket(f_x_closed(tables), p));
    if (delta != via_x) throw CrossCheckMismatch();
    return delta;
}

std::int64_t genus(const LaurentPoly& delta) {
    if (delta.is_zero()) throw LaurentError("genus of zero polynomial");
    Exp span = delta.span();
    if (span % 2 != 0) throw OddSpan();
    return span / 2;
}

const char* to_string(FormFault f) {
    switch (f) {
        case FormFault::None: return "None";
        case FormFault::ZeroPolynomial: return "ZeroPolynomial";
        case FormFault::OddSpan: return "OddSpan";
        case FormFault::NotReciprocal: return "NotReciprocal";
        case FormFault::CoefficientNotUnit: return "CoefficientNotUnit";
        case FormFault::EvenTermCount: return "EvenTermCount";
        case FormFault::NotAlternating: return "NotAlternating";
    }
    return "?";
}

LaurentPoly FormDecomposition::reconstruct() const {
    LaurentPoly r(1);
    Int sign = 1;
    for (std::int64_t n : n_seq) {
        sign = -sign;
        r.set_coeff(n, sign);
        r.set_coeff(-n, sign);
    }
    return r;
}

FormDecomposition form_decomposition(const LaurentPoly& delta) {
    FormDecomposition out;
    auto fail = [&](FormFault f) {
        out.fault = f;
        return out;
    };
    if (delta.is_zero()) return fail(FormFault::ZeroPolynomial);
    Exp lo = delta.min_exp(), hi = delta.max_exp();
    if ((hi - lo) % 2 != 0) return fail(FormFault::OddSpan);
    Exp center = lo + (hi - lo) / 2;
    LaurentPoly sym = delta.shifted(-center);

    for (const auto& [e, c] : sym.terms()) {
        if (c != 1 && c != -1) return fail(FormFault::CoefficientNotUnit);
        if (sym.coeff(-e) != c) return fail(FormFault::NotReciprocal);
    }
    Int center_coeff = sym.coeff(0);
    if (center_coeff == 0) return fail(FormFault::EvenTermCount);
    if (center_coeff < 0) sym = -sym;

    // Positive exponents in ascending order must alternate -1, +1, -1, ...
    Int expected = -1;
    for (const auto& [e, c] : sym.terms()) {
        if (e <= 0) continue;
        if (c != expected) return fail(FormFault::NotAlternating);
        expected = -expected;
        out.n_seq.push_back(e);
    }
    out.m_count = static_cast<std::int64_t>(out.n_seq.size());
    out.ok = true;
    return out;
}

namespace {

// Membership in the cyclic interval [a, a + len - 1] inside {1, ..., p}.
bool in_cyclic_interval(std::int64_t i, std::int64_t a, std::int64_t len, std::int64_t p) {
    if (len <= 0) return false;
    std::int64_t off = ((i - a) % p + p) % p;
    return off < len;
}

}  // namespace

StructureReport structure_analysis(const SequenceTables& tables) {
    const auto [p, q, k] = tables.triple;
    StructureReport rep;

    rep.d_min = *std::min_element(tables.c_val.begin() + 1, tables.c_val.end());
    rep.e_min = tables.c_val[tables.hit_indices.front()] - p;
    for (std::int64_t ij : tables.hit_indices) rep.e_min = std::min(rep.e_min, tables.c_val[ij] - p);

    for (std::int64_t ij : tables.hit_indices) {
        std::int64_t shifted = tables.c_val[ij] - p - rep.e_min;
        rep.entries.push_back({ij, shifted % k, shifted / k});
    }

    rep.ell = 0;
    for (std::int64_t i = 1; i <= p; ++i) {
        std::int64_t excess = tables.c_val[i] - rep.d_min;
        if (excess >= p) {
            std::int64_t h = excess / p;
            rep.excess_partition[h].push_back(i);
            rep.ell = std::max(rep.ell, h);
        }
    }
    rep.w1_only = rep.ell <= 1;

    LaurentPoly multiplicity_sum;  // sum over m(i_j) > 0 of t^{d(i_j)} [m(i_j)]^k
    for (const auto& ent : rep.entries)
        if (ent.m > 0) multiplicity_sum += bracket(ent.m, k).shifted(ent.d);
    rep.product_form = LaurentPoly(1) + (LaurentPoly::term(1) - LaurentPoly(1)) * multiplicity_sum;

    // The product form must reproduce the canonical Alexander polynomial.
    if (rep.product_form != canonicalize(alexander_polynomial(tables)))
        throw IdentityViolation("product form does not match the Alexander polynomial");

    // sum_h S_h, with S_h = [h]^p sum_{i in W(h)} t^{c(i)-d-hp}, must equal
    // the multiplicity sum.
    LaurentPoly s_total;
    for (const auto& [h, members] : rep.excess_partition) {
        LaurentPoly inner;
        for (std::int64_t i : members) {
            Exp e = tables.c_val[i] - rep.d_min - h * p;
            inner.set_coeff(e, inner.coeff(e) + 1);
        }
        s_total += bracket(h, p) * inner;
    }
    if (s_total != multiplicity_sum) throw IdentityViolation("sum of S_h differs from the multiplicity sum");

    return rep;
}

}  // namespace dpk
