#ifndef WEBCALC_CYCLOTOMIC_HPP
#define WEBCALC_CYCLOTOMIC_HPP

#include <vector>
#include <string>
#include "webcalc/rational.hpp"

namespace webcalc {

// Dense polynomials over Q, used for cyclotomic polynomials and reduction.
using QPoly = std::vector<Rational>; // coefficient of x^i at index i; no trailing zeros

QPoly qpoly_trim(QPoly p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
// Exact division; throws if the remainder is nonzero.
QPoly qpoly_div_exact(const QPoly& a, const QPoly& b);
// Division with remainder: returns quotient, stores remainder.
QPoly qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& rem);

// The N-th cyclotomic polynomial, computed by dividing x^N - 1 by Phi_d
// for all proper divisors d of N.
const QPoly& cyclotomic_polynomial(int N);

// An element of Q(zeta_N), stored as a polynomial in zeta reduced mod Phi_N.
// Equality of reduced coefficient vectors decides equality in the field.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_() {}
    Cyclotomic(int order, Rational constant);
    static Cyclotomic zero(int order) { return Cyclotomic(order, Rational(0)); }
    static Cyclotomic one(int order) { return Cyclotomic(order, Rational(1)); }
    // zeta_N^k, canonical representative
    static Cyclotomic zeta_power(int order, long k);
    static Cyclotomic from_coeffs(int order, std::vector<Rational> raw); // reduces mod Phi_N

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const; // requires is_rational()

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inverse() const; // throws on zero
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string to_string() const; // e.g. "3/2*z^2 - 1"

private:
    int order_;
    std::vector<Rational> c_; // length deg(Phi_order), possibly with trailing zeros kept
    void align(const Cyclotomic& o, Cyclotomic& a, Cyclotomic& b) const;
};

// e_k evaluated at {zeta^1, ..., zeta^N}.
Cyclotomic elementary_symmetric_at_zeta(int N, int k);

} // namespace webcalc

#endif
