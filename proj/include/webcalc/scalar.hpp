#ifndef WEBCALC_SCALAR_HPP
#define WEBCALC_SCALAR_HPP

#include <string>
#include <variant>
#include "webcalc/cyclotomic.hpp"
#include "webcalc/laurent.hpp"

namespace webcalc {

// Evaluation regimes. Scalars of different modes never mix.
enum class Mode { QGeneric, Zeta, FormalX };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// A coefficient in the ring selected by the run mode:
//   QGeneric -> Laurent polynomials in q over Q
//   Zeta     -> Q(zeta_N)
//   FormalX  -> Laurent polynomials in X_1..X_N over Q
class Scalar {
public:
    Scalar() : mode_(Mode::Zeta), v_(Cyclotomic()) {}
    static Scalar make(Mode m, int N, Rational c);
    static Scalar zero(Mode m, int N) { return make(m, N, Rational(0)); }
    static Scalar one(Mode m, int N) { return make(m, N, Rational(1)); }
    static Scalar from_q(LaurentQ v) { return Scalar(Mode::QGeneric, std::move(v)); }
    static Scalar from_zeta(Cyclotomic v) { return Scalar(Mode::Zeta, std::move(v)); }
    static Scalar from_x(LaurentX v) { return Scalar(Mode::FormalX, std::move(v)); }
    // gamma_i in the given mode: zeta^i or X_i; power may be negative
    static Scalar eigenvalue(Mode m, int N, int i, long power);
    // q in QGeneric, else 1
    static Scalar q_power(Mode m, int N, long e);

    Mode mode() const { return mode_; }
    bool is_zero() const;
    const LaurentQ& as_q() const { return std::get<LaurentQ>(v_); }
    const Cyclotomic& as_zeta() const { return std::get<Cyclotomic>(v_); }
    const LaurentX& as_x() const { return std::get<LaurentX>(v_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;
    // Exact division (supports non-monomial Laurent divisors); throws when
    // the quotient does not exist in the ring.
    Scalar div_exact(const Scalar& o) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Scalar(Mode m, std::variant<LaurentQ, Cyclotomic, LaurentX> v) : mode_(m), v_(std::move(v)) {}
    Mode mode_;
    std::variant<LaurentQ, Cyclotomic, LaurentX> v_;
    void check(const Scalar& o) const;
};

// Ring-homomorphic specializations between regimes.
Rational specialize_q1(const LaurentQ& p);                 // q -> 1
Cyclotomic specialize_x_to_zeta(const LaurentX& p, int N); // X_i -> zeta^i
// Scalar-level wrapper; rejects assignments across incompatible modes.
Scalar specialize(const Scalar& s, Mode target, int N);

// Parse a scalar in the textual syntax, e.g. "3/2*z^2 - 1", "q^2 + 1 + q^-2",
// "X1*X2^-1", "-1/2". Throws std::runtime_error on bad syntax.
Scalar parse_scalar(const std::string& text, Mode m, int N);

} // namespace webcalc

#endif
