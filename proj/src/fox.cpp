#include "dpk/fox.hpp"

namespace dpk {

void FreeWord::append(Generator g, std::int64_t e) {
    if (e == 0) return;
    if (!letters.empty() && letters.back().gen == g) {
        letters.back().exp += e;
        if (letters.back().exp == 0) letters.pop_back();
        return;
    }
    letters.push_back({g, e});
}

std::int64_t FreeWord::total_exp(Generator g) const {
    std::int64_t t = 0;
    for (const auto& l : letters)
        if (l.gen == g) t += l.exp;
    return t;
}

FreeWord relator(const SequenceTables& tables) {
    FreeWord w;
    for (std::int64_t i = 1; i <= tables.triple.p; ++i) {
        w.append(Generator::X, 1);
        if (tables.e_ind[i]) w.append(Generator::Y, 1);
    }
    return w;
}

LaurentPoly fox_derivative_abelianized(const FreeWord& w, Generator gen, const AbelianizationWeights& weights) {
    LaurentPoly deriv;
    std::int64_t prefix = 0;  // abelianized weight of the prefix read so far
    for (const auto& l : w.letters) {
        std::int64_t wg = l.gen == Generator::X ? weights.weight_x : weights.weight_y;
        if (l.gen == gen) {
            // d(g^e)/dg = 1 + g + ... + g^{e-1} for e > 0,
            //            -(g^{-1} + ... + g^{e}) for e < 0.
            if (l.exp > 0) {
                for (std::int64_t j = 0; j < l.exp; ++j) {
                    Exp e = prefix + j * wg;
                    deriv.set_coeff(e, deriv.coeff(e) + 1);
                }
            } else {
                for (std::int64_t j = 1; j <= -l.exp; ++j) {
                    Exp e = prefix - j * wg;
                    deriv.set_coeff(e, deriv.coeff(e) - 1);
                }
            }
        }
        prefix += l.exp * wg;
    }
    return deriv;
}

LaurentPoly oracle_alexander(const SequenceTables& tables) {
    const auto [p, q, k] = tables.triple;
    FreeWord r = relator(tables);
    AbelianizationWeights weights{-k, p};
    LaurentPoly fx = fox_derivative_abelianized(r, Generator::X, weights);
    LaurentPoly fy = fox_derivative_abelianized(r, Generator::Y, weights);
    return canonicalize(gcd_primitive(fx, fy));
}

}  // namespace dpk
