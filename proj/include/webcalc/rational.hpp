#ifndef WEBCALC_RATIONAL_HPP
#define WEBCALC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace webcalc {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// invariants gcd(num, den) = 1 and den > 0 canonically.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int binomial_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

inline Int factorial_int(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace webcalc

#endif
