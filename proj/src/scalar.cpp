#include "webcalc/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace webcalc {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::QGeneric: return "q";
        case Mode::Zeta: return "zeta";
        case Mode::FormalX: return "formalX";
    }
    return "?";
}

Mode mode_from_name(const std::string& s) {
    if (s == "q") return Mode::QGeneric;
    if (s == "zeta") return Mode::Zeta;
    if (s == "formalX" || s == "formalx") return Mode::FormalX;
    throw std::runtime_error("unknown mode: " + s);
}

Scalar Scalar::make(Mode m, int N, Rational c) {
    switch (m) {
        case Mode::QGeneric: return Scalar(m, LaurentQ(std::move(c)));
        case Mode::Zeta: return Scalar(m, Cyclotomic(N, std::move(c)));
        case Mode::FormalX: return Scalar(m, LaurentX(N, std::move(c)));
    }
    throw std::logic_error("bad mode");
}

Scalar Scalar::eigenvalue(Mode m, int N, int i, long power) {
    if (m == Mode::Zeta) return from_zeta(Cyclotomic::zeta_power(N, (long)i * power));
    if (m == Mode::FormalX) return from_x(LaurentX::variable(N, i, (int)power));
    throw std::invalid_argument("eigenvalue: annular evaluation needs zeta or formalX mode");
}

Scalar Scalar::q_power(Mode m, int N, long e) {
    if (m == Mode::QGeneric) return from_q(LaurentQ::q_power(e));
    return one(m, N);
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

void Scalar::check(const Scalar& o) const {
    if (mode_ != o.mode_) throw std::invalid_argument("Scalar: mixed modes");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    return std::visit(
        [&](const auto& a) -> Scalar {
            using T = std::decay_t<decltype(a)>;
            return Scalar(mode_, a + std::get<T>(o.v_));
        },
        v_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    return std::visit([&](const auto& a) -> Scalar { return Scalar(mode_, -a); }, v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    return std::visit(
        [&](const auto& a) -> Scalar {
            using T = std::decay_t<decltype(a)>;
            return Scalar(mode_, a * std::get<T>(o.v_));
        },
        v_);
}

Scalar Scalar::inverse() const {
    return std::visit([&](const auto& a) -> Scalar { return Scalar(mode_, a.inverse()); }, v_);
}

Scalar Scalar::div_exact(const Scalar& o) const {
    check(o);
    if (mode_ == Mode::QGeneric) return Scalar(mode_, as_q().div_exact(o.as_q()));
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode_ != o.mode_) return false;
    return v_ == o.v_;
}

std::string Scalar::to_string() const {
    return std::visit([](const auto& a) { return a.to_string(); }, v_);
}

Rational specialize_q1(const LaurentQ& p) { return p.at_q1(); }

Cyclotomic specialize_x_to_zeta(const LaurentX& p, int N) {
    Cyclotomic r = Cyclotomic::zero(N);
    for (auto& [e, c] : p.terms()) {
        long zexp = 0;
        for (size_t i = 0; i < e.size(); ++i) zexp += (long)(i + 1) * e[i];
        r = r + Cyclotomic::zeta_power(N, zexp) * Cyclotomic(N, c);
    }
    return r;
}

Scalar specialize(const Scalar& s, Mode target, int N) {
    if (s.mode() == Mode::QGeneric && target == Mode::Zeta)
        return Scalar::from_zeta(Cyclotomic(N, specialize_q1(s.as_q())));
    if (s.mode() == Mode::FormalX && target == Mode::Zeta)
        return Scalar::from_zeta(specialize_x_to_zeta(s.as_x(), N));
    if (s.mode() == target) return s;
    throw std::invalid_argument("specialize: unsupported mode assignment");
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& t) : s(t) {}
    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eof() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip(); return s[i++]; }
    bool accept(char c) { if (peek() == c) { ++i; return true; } return false; }
    long integer() {
        skip();
        bool neg = accept('-');
        if (!std::isdigit((unsigned char)peek())) throw std::runtime_error("scalar: digit expected");
        long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
};

// factor := rational | var['^' int]   where var in {q, z, X<k>}
// term   := factor ('*' factor)*
// expr   := ['-'] term (('+'|'-') term)*
Scalar parse_factor(Lexer& lx, Mode m, int N) {
    char c = lx.peek();
    if (std::isdigit((unsigned char)c)) {
        long num = lx.integer();
        if (lx.accept('/')) {
            long den = lx.integer();
            return Scalar::make(m, N, Rational(num, den));
        }
        return Scalar::make(m, N, Rational(num));
    }
    if (c == 'q') {
        lx.get();
        long e = lx.accept('^') ? lx.integer() : 1;
        if (m != Mode::QGeneric) throw std::runtime_error("scalar: q only valid in q mode");
        return Scalar::from_q(LaurentQ::q_power(e));
    }
    if (c == 'z') {
        lx.get();
        long e = lx.accept('^') ? lx.integer() : 1;
        if (m != Mode::Zeta) throw std::runtime_error("scalar: z only valid in zeta mode");
        return Scalar::from_zeta(Cyclotomic::zeta_power(N, e));
    }
    if (c == 'X') {
        lx.get();
        long idx = lx.integer();
        long e = lx.accept('^') ? lx.integer() : 1;
        if (m != Mode::FormalX) throw std::runtime_error("scalar: X only valid in formalX mode");
        if (idx < 1 || idx > N) throw std::runtime_error("scalar: X index out of range");
        return Scalar::from_x(LaurentX::variable(N, (int)idx, (int)e));
    }
    throw std::runtime_error("scalar: unexpected character");
}

Scalar parse_term(Lexer& lx, Mode m, int N) {
    Scalar r = parse_factor(lx, m, N);
    while (lx.accept('*')) r = r * parse_factor(lx, m, N);
    return r;
}

} // namespace

Scalar parse_scalar(const std::string& text, Mode m, int N) {
    Lexer lx(text);
    Scalar r = Scalar::zero(m, N);
    bool neg = lx.accept('-');
    Scalar t = parse_term(lx, m, N);
    r = neg ? r - t : r + t;
    while (!lx.eof()) {
        char c = lx.get();
        if (c == '+') r = r + parse_term(lx, m, N);
        else if (c == '-') r = r - parse_term(lx, m, N);
        else throw std::runtime_error("scalar: expected + or -");
    }
    return r;
}

} // namespace webcalc
