#ifndef WEBCALC_LAURENT_HPP
#define WEBCALC_LAURENT_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>
#include "webcalc/rational.hpp"

namespace webcalc {

// Laurent polynomials in q over Q. No zero coefficients are stored.
class LaurentQ {
public:
    LaurentQ() = default;
    explicit LaurentQ(Rational c) { if (c != 0) c_[0] = std::move(c); }
    static LaurentQ q_power(long e, Rational c = Rational(1)) {
        LaurentQ r;
        if (c != 0) r.c_[e] = std::move(c);
        return r;
    }

    const std::map<long, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    Rational constant_part() const {
        if (c_.empty()) return Rational(0);
        if (!is_constant()) throw std::runtime_error("LaurentQ: not constant");
        return c_.begin()->second;
    }
    Rational at_q1() const {
        Rational s = 0;
        for (auto& [e, c] : c_) { (void)e; s += c; }
        return s;
    }

    LaurentQ operator+(const LaurentQ& o) const {
        LaurentQ r = *this;
        for (auto& [e, c] : o.c_) {
            auto& v = r.c_[e];
            v += c;
            if (v == 0) r.c_.erase(e);
        }
        return r;
    }
    LaurentQ operator-() const {
        LaurentQ r = *this;
        for (auto& [e, c] : r.c_) { (void)e; c = -c; }
        return r;
    }
    LaurentQ operator-(const LaurentQ& o) const { return *this + (-o); }
    LaurentQ operator*(const LaurentQ& o) const {
        LaurentQ r;
        for (auto& [e1, c1] : c_)
            for (auto& [e2, c2] : o.c_) {
                auto& v = r.c_[e1 + e2];
                v += c1 * c2;
                if (v == 0) r.c_.erase(e1 + e2);
            }
        return r;
    }
    LaurentQ inverse() const {
        if (c_.size() != 1) throw std::runtime_error("LaurentQ: only monomials invert");
        return q_power(-c_.begin()->first, Rational(1) / c_.begin()->second);
    }
    // Exact division; throws if the remainder is nonzero.
    LaurentQ div_exact(const LaurentQ& d) const {
        if (d.is_zero()) throw std::runtime_error("LaurentQ: division by zero");
        if (is_zero()) return LaurentQ();
        long shift_n = c_.begin()->first, shift_d = d.c_.begin()->first;
        long deg_n = c_.rbegin()->first - shift_n, deg_d = d.c_.rbegin()->first - shift_d;
        if (deg_n < deg_d) throw std::runtime_error("LaurentQ: inexact division");
        std::vector<Rational> pn(deg_n + 1, Rational(0)), pd(deg_d + 1, Rational(0));
        for (auto& [e, c] : c_) pn[e - shift_n] = c;
        for (auto& [e, c] : d.c_) pd[e - shift_d] = c;
        std::vector<Rational> q(deg_n - deg_d + 1, Rational(0));
        for (long i = deg_n; i >= deg_d; --i) {
            Rational c = pn[i] / pd[deg_d];
            q[i - deg_d] = c;
            if (c != 0)
                for (long j = 0; j <= deg_d; ++j) pn[i - deg_d + j] -= c * pd[j];
        }
        for (long i = 0; i < deg_d; ++i)
            if (pn[i] != 0) throw std::runtime_error("LaurentQ: inexact division");
        LaurentQ r;
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0) r = r + q_power((long)i + shift_n - shift_d, q[i]);
        return r;
    }
    bool operator==(const LaurentQ& o) const { return c_ == o.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Rational v = it->second;
            if (first) { if (v < 0) { os << "-"; v = -v; } }
            else { os << (v < 0 ? " - " : " + "); if (v < 0) v = -v; }
            first = false;
            long e = it->first;
            if (e == 0) os << rat_to_string(v);
            else {
                if (v != 1) os << rat_to_string(v) << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::map<long, Rational> c_;
};

// Balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1).
inline LaurentQ quantum_int(long n) {
    LaurentQ r;
    long a = n < 0 ? -n : n;
    for (long e = -(a - 1); e <= a - 1; e += 2) r = r + LaurentQ::q_power(e);
    if (n < 0) r = -r;
    return r;
}

// Balanced quantum binom [n over k].
inline LaurentQ quantum_binomial(long n, long k) {
    if (k < 0 || k > n) return LaurentQ();
    LaurentQ num(Rational(1)), den(Rational(1));
    for (long i = 0; i < k; ++i) {
        num = num * quantum_int(n - i);
        den = den * quantum_int(i + 1);
    }
    return num.div_exact(den);
}

// Multivariate Laurent polynomials in X_1..X_N over Q.
class LaurentX {
public:
    using Expo = std::vector<int>; // length N

    LaurentX() : n_(0) {}
    explicit LaurentX(int n, Rational c = Rational(0)) : n_(n) {
        if (c != 0) c_[Expo(n, 0)] = std::move(c);
    }
    static LaurentX variable(int n, int i, int power = 1) { // X_i^power, 1-based i
        LaurentX r(n);
        Expo e(n, 0);
        e[i - 1] = power;
        r.c_.clear();
        r.c_[e] = 1;
        return r;
    }
    static LaurentX monomial(int n, Expo e, Rational c) {
        LaurentX r(n);
        r.c_.clear();
        if (c != 0) r.c_[std::move(e)] = std::move(c);
        return r;
    }

    int vars() const { return n_; }
    const std::map<Expo, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == Expo(n_, 0));
    }
    Rational constant_part() const {
        if (c_.empty()) return Rational(0);
        if (!is_constant()) throw std::runtime_error("LaurentX: not constant");
        return c_.begin()->second;
    }

    LaurentX operator+(const LaurentX& o) const {
        LaurentX r = align(o);
        LaurentX b = o.align(*this);
        for (auto& [e, c] : b.c_) {
            auto& v = r.c_[e];
            v += c;
            if (v == 0) r.c_.erase(e);
        }
        return r;
    }
    LaurentX operator-() const {
        LaurentX r = *this;
        for (auto& [e, c] : r.c_) { (void)e; c = -c; }
        return r;
    }
    LaurentX operator-(const LaurentX& o) const { return *this + (-o); }
    LaurentX operator*(const LaurentX& o) const {
        LaurentX a = align(o), b = o.align(*this), r(std::max(n_, o.n_));
        r.c_.clear();
        for (auto& [e1, c1] : a.c_)
            for (auto& [e2, c2] : b.c_) {
                Expo e(e1.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                auto& v = r.c_[e];
                v += c1 * c2;
                if (v == 0) r.c_.erase(e);
            }
        return r;
    }
    LaurentX inverse() const {
        if (c_.size() != 1) throw std::runtime_error("LaurentX: only monomials invert");
        Expo e = c_.begin()->first;
        for (auto& x : e) x = -x;
        return monomial(n_, std::move(e), Rational(1) / c_.begin()->second);
    }
    bool operator==(const LaurentX& o) const {
        return align(o).c_ == o.align(*this).c_;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Rational v = it->second;
            if (first) { if (v < 0) { os << "-"; v = -v; } }
            else { os << (v < 0 ? " - " : " + "); if (v < 0) v = -v; }
            first = false;
            const Expo& e = it->first;
            bool any = false;
            std::ostringstream mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (any) mono << "*";
                any = true;
                mono << "X" << (i + 1);
                if (e[i] != 1) mono << "^" << e[i];
            }
            if (!any) os << rat_to_string(v);
            else {
                if (v != 1) os << rat_to_string(v) << "*";
                os << mono.str();
            }
        }
        return os.str();
    }

private:
    int n_;
    std::map<Expo, Rational> c_;
    LaurentX align(const LaurentX& o) const {
        if (n_ >= o.n_) return *this;
        LaurentX r(o.n_);
        r.c_.clear();
        for (auto& [e, c] : c_) {
            Expo e2 = e;
            e2.resize(o.n_, 0);
            r.c_[e2] = c;
        }
        return r;
    }
};

} // namespace webcalc

#endif
