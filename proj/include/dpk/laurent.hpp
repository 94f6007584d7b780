#ifndef DPK_LAURENT_HPP
#define DPK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dpk {

// Coefficients are arbitrary-precision integers, so ring operations never
// overflow.  Exponents are 64-bit and checked on addition.
using Int = boost::multiprecision::cpp_int;
using Exp = std::int64_t;

struct LaurentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : LaurentError {
    DivisionByZero() : LaurentError("division by zero polynomial") {}
};
struct NotDivisible : LaurentError {
    NotDivisible() : LaurentError("no exact quotient over the integers") {}
};
struct ExponentOverflow : LaurentError {
    ExponentOverflow() : LaurentError("exponent arithmetic overflow") {}
};

// Exact integer Laurent polynomial in one variable t.  Stored as a map from
// exponent to nonzero coefficient; the zero polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Int constant);  // NOLINT: implicit from integer constants
    LaurentPoly(std::initializer_list<std::pair<Exp, Int>> terms);

    static LaurentPoly term(Exp e, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Precondition for min_exp/max_exp: nonzero.
    Exp min_exp() const;
    Exp max_exp() const;
    Exp span() const { return max_exp() - min_exp(); }

    Int coeff(Exp e) const;
    const std::map<Exp, Int>& terms() const { return terms_; }

    void set_coeff(Exp e, Int c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& rhs) const = default;

    // Multiplication by the unit t^e.
    LaurentPoly shifted(Exp e) const;

    // Substitutes t -> t^{-1}.
    LaurentPoly reversed() const;

    Int evaluate_at_one() const;

    // Terms in ascending exponent order, e.g. "1 - t + t^3 - t^-4".
    std::string str() const;

private:
    std::map<Exp, Int> terms_;
};

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient q with num = den * q over the integer Laurent ring.
// Throws NotDivisible / DivisionByZero.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

// Returns true and writes the quotient on success, false when not divisible.
bool try_exact_divide(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& quot);

// Exact division by bracket(h), computed via num*(t-1) = quot*(t^h - 1);
// linear in the exponent span, used on the bulk-sweep path.
bool try_divide_bracket(const LaurentPoly& num, std::int64_t h, LaurentPoly& quot);
LaurentPoly divide_bracket(const LaurentPoly& num, std::int64_t h);

// Canonical primitive gcd: Euclid over the rationals (run as a primitive
// pseudo-remainder sequence), content stripped, then canonicalized.
// Throws LaurentError when both inputs are zero.
LaurentPoly gcd_primitive(const LaurentPoly& a, const LaurentPoly& b);

// Multiplies by +-t^n so the lowest term has exponent 0 and positive
// coefficient.  Zero maps to zero.
LaurentPoly canonicalize(const LaurentPoly& a);

// [h]^n = t^{(h-1)n} + t^{(h-2)n} + ... + t^n + 1.  bracket(h) is [h].
LaurentPoly bracket(std::int64_t h, std::int64_t n = 1);

}  // namespace dpk

#endif
