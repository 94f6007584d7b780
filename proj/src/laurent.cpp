#include "dpk/laurent.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace dpk {

namespace {

Exp checked_add(Exp a, Exp b) {
    Exp r;
    if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow();
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exp, Int>> terms) {
    for (const auto& [e, c] : terms) set_coeff(e, coeff(e) + c);
}

LaurentPoly LaurentPoly::term(Exp e, Int c) {
    LaurentPoly p;
    p.set_coeff(e, std::move(c));
    return p;
}

Exp LaurentPoly::min_exp() const {
    if (terms_.empty()) throw LaurentError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

Exp LaurentPoly::max_exp() const {
    if (terms_.empty()) throw LaurentError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(Exp e, Int c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) set_coeff(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) set_coeff(e, coeff(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.set_coeff(checked_add(ea, eb), r.coeff(checked_add(ea, eb)) + ca * cb);
    return r;
}

LaurentPoly LaurentPoly::shifted(Exp e) const {
    LaurentPoly r;
    for (const auto& [ex, c] : terms_) r.terms_.emplace(checked_add(ex, e), c);
    return r;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (e == std::numeric_limits<Exp>::min()) throw ExponentOverflow();
        r.terms_.emplace(-e, c);
    }
    return r;
}

Int LaurentPoly::evaluate_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

bool try_exact_divide(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& quot) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        quot = LaurentPoly{};
        return true;
    }
    LaurentPoly rem = num;
    LaurentPoly q;
    const Exp den_top = den.max_exp();
    const Int& den_lead = den.terms().rbegin()->second;
    // Any exact quotient has lowest exponent num.min - den.min; dropping
    // below that bound certifies non-divisibility (otherwise Laurent
    // division would descend forever).
    const Exp q_min = num.min_exp() - den.min_exp();
    while (!rem.is_zero()) {
        Exp e = rem.max_exp();
        Int lead = rem.coeff(e);
        // An integer quotient, if it exists, is produced term by term from
        // the top; a non-exact leading division certifies non-divisibility.
        if (lead % den_lead != 0) return false;
        Exp qe = e - den_top;
        if (qe < q_min) return false;
        Int qc = lead / den_lead;
        q.set_coeff(qe, qc);
        rem -= den.shifted(qe) * LaurentPoly(qc);
        if (!rem.is_zero() && rem.max_exp() >= e) throw LaurentError("division failed to reduce degree");
    }
    quot = std::move(q);
    return true;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    LaurentPoly q;
    if (!try_exact_divide(num, den, q)) throw NotDivisible();
    return q;
}

bool try_divide_bracket(const LaurentPoly& num, std::int64_t h, LaurentPoly& quot) {
    if (h < 1) throw LaurentError("bracket divisor requires h >= 1");
    if (h == 1) {
        quot = num;
        return true;
    }
    if (num.is_zero()) {
        quot = LaurentPoly{};
        return true;
    }
    // g = num * (t - 1), dense over [lo, hi]; [h] | num iff (t^h - 1) | g.
    const Exp lo = num.min_exp();
    const Exp hi = num.max_exp() + 1;
    std::vector<Int> g(hi - lo + 1);
    for (const auto& [e, c] : num.terms()) {
        g[e + 1 - lo] += c;
        g[e - lo] -= c;
    }
    LaurentPoly q;
    for (Exp idx = hi - lo; idx >= h; --idx) {
        if (g[idx] == 0) continue;
        q.set_coeff(lo + idx - h, g[idx]);
        g[idx - h] += g[idx];
        g[idx] = 0;
    }
    const Exp tail = std::min<Exp>(h - 1, hi - lo);
    for (Exp idx = 0; idx <= tail; ++idx)
        if (g[idx] != 0) return false;
    quot = std::move(q);
    return true;
}

LaurentPoly divide_bracket(const LaurentPoly& num, std::int64_t h) {
    LaurentPoly q;
    if (!try_divide_bracket(num, h, q)) throw NotDivisible();
    return q;
}

namespace {

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
    return g;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.set_coeff(e, c / g);
    return r;
}

// Pseudo-remainder of a by b as ordinary polynomials (both shifted so the
// lowest exponent is 0 first).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const Exp bt = b.max_exp();
    const Int& bl = b.terms().rbegin()->second;
    while (!a.is_zero() && a.max_exp() >= bt) {
        Exp e = a.max_exp();
        Int lead = a.coeff(e);
        // Scale so the leading term cancels without leaving the integers.
        Int g = boost::multiprecision::gcd(lead, bl);
        Int scale = bl / g;
        if (scale != 1) a = a * LaurentPoly(scale);
        a -= b.shifted(e - bt) * LaurentPoly(lead * scale / bl);
    }
    return a;
}

}  // namespace

LaurentPoly gcd_primitive(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw LaurentError("gcd of two zero polynomials");
    if (a.is_zero()) return canonicalize(b);
    if (b.is_zero()) return canonicalize(a);
    LaurentPoly u = primitive_part(canonicalize(a));
    LaurentPoly v = primitive_part(canonicalize(b));
    if (u.max_exp() < v.max_exp()) std::swap(u, v);
    while (!v.is_zero()) {
        LaurentPoly r = primitive_part(canonicalize(pseudo_rem(u, v)));
        u = std::move(v);
        v = std::move(r);
    }
    return canonicalize(u);
}

LaurentPoly canonicalize(const LaurentPoly& a) {
    if (a.is_zero()) return a;
    LaurentPoly r = a.shifted(-a.min_exp());
    if (r.terms().begin()->second < 0) r = -r;
    return r;
}

LaurentPoly bracket(std::int64_t h, std::int64_t n) {
    if (h < 1 || n < 1) throw LaurentError("bracket requires h >= 1 and n >= 1");
    LaurentPoly r;
    for (std::int64_t j = 0; j < h; ++j) r.set_coeff(checked_add(0, j * n), 1);
    return r;
}

}  // namespace dpk
