#include "dpk/params.hpp"

#include <algorithm>
#include <numeric>

namespace dpk {

const char* to_string(TripleFault f) {
    switch (f) {
        case TripleFault::RangeError: return "RangeError";
        case TripleFault::NotCoprimePQ: return "NotCoprimePQ";
        case TripleFault::NotCoprimePK: return "NotCoprimePK";
    }
    return "?";
}

bool classify_triple(std::int64_t p, std::int64_t q, std::int64_t k, TripleFault& fault) {
    if (p < 2 || q <= 0 || q >= p || k < 1 || k >= p) {
        fault = TripleFault::RangeError;
        return false;
    }
    if (std::gcd(p, q) != 1) {
        fault = TripleFault::NotCoprimePQ;
        return false;
    }
    if (std::gcd(p, k) != 1) {
        fault = TripleFault::NotCoprimePK;
        return false;
    }
    return true;
}

SurgeryTriple validate_triple(std::int64_t p, std::int64_t q, std::int64_t k) {
    TripleFault fault;
    if (!classify_triple(p, q, k, fault)) {
        throw InvalidTriple(fault, std::string(to_string(fault)) + " for triple (" + std::to_string(p) + "," +
                                       std::to_string(q) + "," + std::to_string(k) + ")");
    }
    return SurgeryTriple{p, q, k};
}

SequenceTables compute_tables(const SurgeryTriple& triple) {
    const auto [p, q, k] = triple;
    SequenceTables t;
    t.triple = triple;
    t.psi.assign(p + 1, 0);
    t.phi.assign(p + 1, 0);
    t.e_ind.assign(p + 1, 0);
    t.s_partial.assign(p + 1, 0);
    t.c_val.assign(p + 1, 0);

    // psi[i] is the position of i in the basic sequence {nq mod p}_{n=1..p};
    // nq mod p == 0 happens at n = p, giving psi[0] = p.
    for (std::int64_t n = 1; n <= p; ++n) t.psi[(n * q) % p] = n;
    t.psi[p] = p;

    // phi[i] counts j in 1..k-1 with psi[j] < psi[i].
    std::vector<std::int64_t> small_psi(t.psi.begin() + 1, t.psi.begin() + k);
    std::sort(small_psi.begin(), small_psi.end());
    for (std::int64_t i = 0; i < p; ++i)
        t.phi[i] = std::lower_bound(small_psi.begin(), small_psi.end(), t.psi[i]) - small_psi.begin();
    t.phi[p] = k - 1;

    for (std::int64_t i = 1; i <= p; ++i) {
        t.e_ind[i] = (i * q) % p < k ? 1 : 0;
        t.s_partial[i] = t.s_partial[i - 1] + t.e_ind[i];
        t.c_val[i] = -i * k + p * t.s_partial[i];
        if (t.e_ind[i]) t.hit_indices.push_back(i);
    }
    return t;
}

SaitoResult saito_condition(const SequenceTables& tables) {
    const auto [p, q, k] = tables.triple;
    std::int64_t value = p * tables.phi[k] - k * tables.psi[k];
    bool passes = value == 1 || value == -1 || value == 1 - p || value == -1 - p;
    return SaitoResult{value, passes};
}

}  // namespace dpk
