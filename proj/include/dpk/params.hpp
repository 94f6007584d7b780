#ifndef DPK_PARAMS_HPP
#define DPK_PARAMS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpk {

enum class TripleFault {
    RangeError,    // q or k outside 0 < q < p, 1 <= k < p
    NotCoprimePQ,  // gcd(p, q) != 1
    NotCoprimePK,  // gcd(p, k) != 1
};

const char* to_string(TripleFault f);

struct InvalidTriple : std::runtime_error {
    TripleFault fault;
    InvalidTriple(TripleFault f, const std::string& msg) : std::runtime_error(msg), fault(f) {}
};

// Validated (p, q, k): lens space order/twisting plus the dual-knot
// parameter.  Out-of-range q is rejected, not reduced mod p.
struct SurgeryTriple {
    std::int64_t p, q, k;
};

// Returns nullopt-style: fault if invalid, otherwise populates out.
bool classify_triple(std::int64_t p, std::int64_t q, std::int64_t k, TripleFault& fault);

// Throws InvalidTriple with the specific fault.
SurgeryTriple validate_triple(std::int64_t p, std::int64_t q, std::int64_t k);

// All the index arrays the closed formulas consume, for one triple.
// Arrays are indexed 0..p with the conventions psi[0] = psi[p] = p and
// phi[p] = k - 1.
struct SequenceTables {
    SurgeryTriple triple;
    std::vector<std::int64_t> psi;          // psi[i], i = 0..p
    std::vector<std::int64_t> phi;          // phi[i], i = 0..p
    std::vector<std::int8_t> e_ind;         // e_ind[i] = E(i), i = 1..p (index 0 unused)
    std::vector<std::int64_t> s_partial;    // s_partial[i] = sum_{j<=i} E(j)
    std::vector<std::int64_t> c_val;        // c_val[i] = -i*k + p*s(i)
    std::vector<std::int64_t> hit_indices;  // ascending i with E(i) = 1; last is p
};

SequenceTables compute_tables(const SurgeryTriple& triple);

struct SaitoResult {
    std::int64_t value;  // p*phi(k) - k*psi(k)
    bool passes;         // value in {1, -1, 1-p, -1-p}
};

// Necessary (not sufficient) condition for the dual knot to admit an
// integral surgery yielding the 3-sphere.
SaitoResult saito_condition(const SequenceTables& tables);

}  // namespace dpk

#endif
