#ifndef DPK_FOX_HPP
#define DPK_FOX_HPP

#include <vector>

#include "dpk/laurent.hpp"
#include "dpk/params.hpp"

namespace dpk {

enum class Generator { X, Y };

struct Letter {
    Generator gen;
    std::int64_t exp;  // nonzero
};

// Reduced word in the free group on X, Y: adjacent letters use distinct
// generators and exponents are nonzero.
struct FreeWord {
    std::vector<Letter> letters;

    void append(Generator g, std::int64_t e);
    std::int64_t total_exp(Generator g) const;
};

// Exponents of t assigned to each generator by the abelianization; for the
// knot-group presentation this is X -> t^{-k}, Y -> t^p.
struct AbelianizationWeights {
    std::int64_t weight_x;
    std::int64_t weight_y;
};

// Relator prod_{i=1}^{p} X Y^{E(i)} in reduced form.
FreeWord relator(const SequenceTables& tables);

// Fox derivative of the word with respect to gen, abelianized on the fly:
// each group element in the derivative becomes t^{(weight of its image)}.
// Computed from the word-traversal axioms, independent of any closed form.
LaurentPoly fox_derivative_abelianized(const FreeWord& w, Generator gen, const AbelianizationWeights& weights);

// gcd of the two abelianized Fox derivatives of the relator; the
// independent route to the Alexander polynomial.
LaurentPoly oracle_alexander(const SequenceTables& tables);

}  // namespace dpk

#endif
