#ifndef HOMCOB_INTEGERS_HPP
#define HOMCOB_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "errors.hpp"

namespace homcob {

// All core arithmetic is exact. Intermediate entries of elimination-style
// algorithms grow far beyond 64 bits even for single-digit inputs, so the
// arbitrary-precision types are not optional.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division and the matching remainder (sign of divisor irrelevant,
// 0 <= mod < |b| when b != 0).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int pos_mod(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += abs(b);
    return r;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// g = gcd(a, b) >= 0 together with x, y such that x*a + y*b = g.
inline Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        a -= q * b;
        std::swap(a, b);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
    return a;
}

// Rat construction tolerating any sign pattern; the underlying two-argument
// constructor insists on a positive denominator.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(std::move(num), std::move(den));
}

// Reduce a rational into [0, 1).
inline Rat mod_one(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    return Rat(pos_mod(n, d), d);
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

} // namespace homcob

#endif
