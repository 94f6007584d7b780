#ifndef DPK_ALEXANDER_HPP
#define DPK_ALEXANDER_HPP

#include <map>
#include <vector>

#include "dpk/laurent.hpp"
#include "dpk/params.hpp"

namespace dpk {

struct CrossCheckMismatch : LaurentError {
    CrossCheckMismatch() : LaurentError("F_Y/[k] and F_X/[p] disagree after canonicalization") {}
};
struct OddSpan : LaurentError {
    OddSpan() : LaurentError("polynomial span is odd; not an Alexander polynomial of a knot") {}
};
struct IdentityViolation : LaurentError {
    using LaurentError::LaurentError;
};

// F(t) = sum_{i=0}^{k-1} t^{phi(i)p - psi(i)k}; exactly k unit terms.
LaurentPoly f_formula(const SequenceTables& tables);

// Fox-derivative images in closed form: F_X = sum_i t^{c(i)} over i = 1..p,
// F_Y = sum_j t^{c(i_j) - p} over the k hit indices.
LaurentPoly f_x_closed(const SequenceTables& tables);
LaurentPoly f_y_closed(const SequenceTables& tables);

// Canonicalized F_Y/[k], cross-checked against F_X/[p].
// Throws NotDivisible or CrossCheckMismatch.
LaurentPoly alexander_polynomial(const SequenceTables& tables);

// Half the exponent span of a canonical nonzero polynomial.
std::int64_t genus(const LaurentPoly& delta);

enum class FormFault {
    None,
    ZeroPolynomial,
    OddSpan,           // cannot be recentered symmetrically
    NotReciprocal,     // coeff(e) != coeff(-e) after recentering
    CoefficientNotUnit,
    EvenTermCount,     // center coefficient vanishes
    NotAlternating,    // signs fail to alternate in ascending exponent order
};

const char* to_string(FormFault f);

// Delta written as 1 + sum_{i=1}^{m} (-1)^i (t^{n_i} + t^{-n_i}).
struct FormDecomposition {
    bool ok = false;
    FormFault fault = FormFault::None;
    std::int64_t m_count = 0;
    std::vector<std::int64_t> n_seq;  // strictly increasing, positive

    // 1 + sum (-1)^i (t^{n_i} + t^{-n_i}) from the extracted data.
    LaurentPoly reconstruct() const;
};

FormDecomposition form_decomposition(const LaurentPoly& delta);

// Per hit index: residue d(i_j) in [0, k) and multiplicity m(i_j) >= 0 of
// the corresponding term of G_Y.
struct StructureEntry {
    std::int64_t index;  // i_j
    std::int64_t d;
    std::int64_t m;
};

struct StructureReport {
    std::int64_t d_min;  // min of c(i), i = 1..p
    std::int64_t e_min;  // min of c(i_j) - p
    std::vector<StructureEntry> entries;
    std::map<std::int64_t, std::vector<std::int64_t>> excess_partition;  // h -> W(h)
    std::int64_t ell;          // largest nonempty level, 0 when no excess
    LaurentPoly product_form;  // 1 + (t-1) sum_{m>0} t^{d(i_j)} [m(i_j)]^k
    bool w1_only;              // every excessive index lies in W(1)
};

// Populates the report and verifies the product-form and S_h identities
// against the Alexander polynomial; throws IdentityViolation on failure.
StructureReport structure_analysis(const SequenceTables& tables);

}  // namespace dpk

#endif
