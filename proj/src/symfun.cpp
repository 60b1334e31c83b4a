#include "webcalc/symfun.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace webcalc {

namespace {

LaurentX swap_vars(const LaurentX& p, int i, int j) {
    LaurentX r(p.vars());
    for (auto& [e, c] : p.terms()) {
        auto e2 = e;
        std::swap(e2[i], e2[j]);
        r = r + LaurentX::monomial(p.vars(), e2, c);
    }
    return r;
}

bool is_symmetric(const LaurentX& p) {
    for (int i = 0; i + 1 < p.vars(); ++i)
        if (!(swap_vars(p, i, i + 1) == p)) return false;
    return true;
}

} // namespace

SymPoly::SymPoly(LaurentX p) : p_(std::move(p)) {
    if (!is_symmetric(p_)) throw std::invalid_argument("SymPoly: not symmetric");
}

SymPoly sym_e(int k, int N) {
    if (k == 0) return SymPoly(LaurentX(N, Rational(1)));
    LaurentX r(N);
    for (Mask S : subsets_of_size(N, k)) {
        LaurentX m(N, Rational(1));
        for (int i : mask_colors(S)) m = m * LaurentX::variable(N, i);
        r = r + m;
    }
    return SymPoly(r);
}

SymPoly sym_h(int k, int N) {
    LaurentX r(N);
    std::vector<int> expo(N, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == N) {
            if (left == 0) r = r + LaurentX::monomial(N, expo, Rational(1));
            return;
        }
        for (int t = 0; t <= left; ++t) {
            expo[var] = t;
            rec(var + 1, left - t);
        }
        expo[var] = 0;
    };
    rec(0, k);
    return SymPoly(r);
}

SymPoly sym_p(int k, int N) {
    LaurentX r(N);
    for (int i = 1; i <= N; ++i) r = r + LaurentX::variable(N, i, k);
    return SymPoly(r);
}

SymPoly sym_m(const std::vector<int>& lambda, int N) {
    std::vector<int> expo = lambda;
    expo.resize(N, 0);
    LaurentX r(N);
    std::sort(expo.begin(), expo.end());
    do {
        r = r + LaurentX::monomial(N, expo, Rational(1));
    } while (std::next_permutation(expo.begin(), expo.end()));
    return SymPoly(r);
}

SymPoly sym_basis(SymKind kind, const std::vector<int>& param, int N) {
    switch (kind) {
        case SymKind::Elementary: return sym_e(param.at(0), N);
        case SymKind::Complete: return sym_h(param.at(0), N);
        case SymKind::PowerSum: return sym_p(param.at(0), N);
        case SymKind::Monomial: return sym_m(param, N);
    }
    throw std::logic_error("sym_basis");
}

bool newton_identity_check(int k, int N) {
    LaurentX lhs = sym_p(k, N).poly();
    LaurentX rhs = sym_e(k, N).poly() * LaurentX(N, Rational((k % 2 == 1) ? k : -k));
    for (int j = 1; j <= k - 1; ++j) {
        LaurentX t = sym_e(k - j, N).poly() * sym_p(j, N).poly();
        rhs = ((k - j) % 2 == 1) ? rhs + t : rhs - t;
    }
    return lhs == rhs;
}

Character character(const SparseOperator& e) {
    if (!is_idempotent(e)) throw std::invalid_argument("character: input not idempotent");
    auto ranks = weight_block_ranks(e);
    Character ch;
    for (auto& [w, r] : ranks)
        if (r != 0) ch[w] = r;
    return ch;
}

LaurentX character_poly(const Character& ch, int N) {
    LaurentX r(N);
    for (auto& [w, mult] : ch) {
        std::vector<int> e(w.begin(), w.end());
        r = r + LaurentX::monomial(N, e, Rational(mult));
    }
    return r;
}

long character_total(const Character& ch) {
    long t = 0;
    for (auto& [w, m] : ch) {
        (void)w;
        t += m;
    }
    return t;
}

std::map<std::vector<int>, Rational> SymPoly::e_expansion() const {
    // strip the lex-leading monomial X^lam by subtracting c * e_{lam'}, the
    // product of elementary polynomials for the conjugate partition; the
    // change of basis is triangular, so this terminates.
    int N = p_.vars();
    std::map<std::vector<int>, Rational> out;
    LaurentX rest = p_;
    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 100000) throw std::runtime_error("e_expansion: no convergence");
        auto it = rest.terms().rbegin();
        std::vector<int> lam = it->first;
        Rational c = it->second;
        for (int v : lam)
            if (v < 0) throw std::invalid_argument("e_expansion: Laurent input");
        std::vector<int> a(N + 1, 0); // multiplicity of e_i
        int maxpart = lam.empty() ? 0 : *std::max_element(lam.begin(), lam.end());
        for (int i = 1; i <= maxpart; ++i) {
            int cnt = 0;
            for (int v : lam)
                if (v >= i) ++cnt;
            if (cnt > N) throw std::invalid_argument("e_expansion: too many parts");
            a[cnt] += 1;
        }
        LaurentX prod(N, Rational(1));
        std::vector<int> key(N, 0);
        for (int i = 1; i <= N; ++i) {
            key[i - 1] = a[i];
            for (int t = 0; t < a[i]; ++t) prod = prod * sym_e(i, N).poly();
        }
        out[key] += c;
        rest = rest - prod * LaurentX(N, c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

} // namespace webcalc
