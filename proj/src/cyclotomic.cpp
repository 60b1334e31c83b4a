#include "webcalc/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace webcalc {

QPoly qpoly_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return qpoly_trim(std::move(r));
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qpoly_trim(std::move(r));
}

QPoly qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& rem) {
    if (b.empty()) throw std::invalid_argument("qpoly: division by zero polynomial");
    rem = qpoly_trim(a);
    if (rem.size() < b.size()) return {};
    QPoly q(rem.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational c = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem = qpoly_trim(std::move(rem));
    }
    return qpoly_trim(std::move(q));
}

QPoly qpoly_div_exact(const QPoly& a, const QPoly& b) {
    QPoly rem;
    QPoly q = qpoly_divmod(a, b, rem);
    if (!rem.empty()) throw std::runtime_error("qpoly: inexact division");
    return q;
}

const QPoly& cyclotomic_polynomial(int N) {
    static std::map<int, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N >= 1 required");

    std::function<const QPoly&(int)> get = [&](int n) -> const QPoly& {
        auto jt = cache.find(n);
        if (jt != cache.end()) return jt->second;
        QPoly xn1(n + 1, Rational(0));
        xn1[0] = -1;
        xn1[n] = 1;
        QPoly num = xn1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) num = qpoly_div_exact(num, get(d));
        return cache.emplace(n, std::move(num)).first->second;
    };
    return get(N);
}

Cyclotomic::Cyclotomic(int order, Rational constant) : order_(order) {
    int deg = (int)cyclotomic_polynomial(order).size() - 1;
    if (order == 1) deg = 1; // Q(zeta_1) = Q; keep one slot
    c_.assign(std::max(deg, 1), Rational(0));
    c_[0] = std::move(constant);
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> raw) {
    const QPoly& phi = cyclotomic_polynomial(order);
    int deg = (int)phi.size() - 1;
    // reduce mod Phi_N by long division
    QPoly rem;
    qpoly_divmod(raw, phi, rem);
    Cyclotomic r(order, Rational(0));
    for (size_t i = 0; i < rem.size(); ++i) r.c_[i] = rem[i];
    (void)deg;
    return r;
}

Cyclotomic Cyclotomic::zeta_power(int order, long k) {
    k %= order;
    if (k < 0) k += order;
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = 1;
    return from_coeffs(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::runtime_error("Cyclotomic: not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

void Cyclotomic::align(const Cyclotomic& o, Cyclotomic& a, Cyclotomic& b) const {
    a = *this;
    b = o;
    // rational constants embed into any order
    if (a.order_ != b.order_) {
        if (a.is_rational()) a = Cyclotomic(b.order_, a.rational_part());
        else if (b.is_rational()) b = Cyclotomic(a.order_, b.rational_part());
        else throw std::invalid_argument("Cyclotomic: mixed orders");
    }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic a, b;
    align(o, a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic a, b;
    align(o, a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (auto& x : a.c_) x = -x;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic a, b;
    align(o, a, b);
    QPoly prod = qpoly_mul(qpoly_trim(a.c_), qpoly_trim(b.c_));
    return from_coeffs(a.order_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::runtime_error("Cyclotomic: inverse of zero");
    if (is_rational()) return Cyclotomic(order_, Rational(1) / rational_part());
    // extended Euclid: a * u + Phi * v = gcd = const
    QPoly a = qpoly_trim(c_);
    QPoly b = cyclotomic_polynomial(order_);
    QPoly u0{Rational(1)}, u1{};
    QPoly r0 = a, r1 = b;
    while (!r1.empty()) {
        QPoly rem;
        QPoly q = qpoly_divmod(r0, r1, rem);
        QPoly u2 = qpoly_sub(u0, qpoly_mul(q, u1));
        r0 = r1; r1 = rem;
        u0 = u1; u1 = u2;
    }
    if (r0.size() != 1) throw std::runtime_error("Cyclotomic: gcd with Phi_N not constant");
    Rational inv = Rational(1) / r0[0];
    for (auto& x : u0) x *= inv;
    return from_coeffs(order_, std::move(u0));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        if (is_rational() && o.is_rational()) return rational_part() == o.rational_part();
        Cyclotomic a, b;
        align(o, a, b);
        return a == b;
    }
    return c_ == o.c_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = (int)c_.size() - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << rat_to_string(v);
        } else {
            if (v != 1) os << rat_to_string(v) << "*";
            os << "z";
            if (i != 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic elementary_symmetric_at_zeta(int N, int k) {
    if (k < 0 || k > N) return Cyclotomic::zero(N);
    // dp over the multiset {zeta^1..zeta^N}
    std::vector<Cyclotomic> e(k + 1, Cyclotomic::zero(N));
    e[0] = Cyclotomic::one(N);
    for (int i = 1; i <= N; ++i) {
        Cyclotomic zi = Cyclotomic::zeta_power(N, i);
        for (int j = std::min(i, k); j >= 1; --j) e[j] = e[j] + zi * e[j - 1];
    }
    return e[k];
}

} // namespace webcalc
