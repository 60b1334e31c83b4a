#include "webcalc/newton.hpp"

#include "webcalc/linalg.hpp"
#include <functional>

#include <algorithm>
#include <sstream>

namespace webcalc {

namespace {

// subsets of {0..N-1} of size k as sorted integer tuples
std::vector<std::vector<int>> index_subsets(int N, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > N) return out;
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(pick);
            return;
        }
        for (int v = start; v < N; ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace

NewtonZigZag::NewtonZigZag(int N_, int k_) : N(N_), k(k_), cfg{N_, Mode::Zeta} {
    e.resize(k + 1, SparseOperator());
    for (int l = 1; l <= k; ++l) {
        SparseOperator tl = proj_T(l, cfg);
        if (l == k) e[l] = tl;
        else e[l] = proj_clasp_anti(k - l, cfg).kron(tl);
    }
    Vk = proj_clasp_anti(k, cfg);
    // bottom family via eigenprojector decorations: x the j-th largest of A
    Q.assign(k + 1, SparseOperator::zero(cfg.mode, ones(N, k), ones(N, k)));
    up.assign(k + 1, SparseOperator::zero(cfg.mode, ones(N, k), ones(N, k)));
    dn.assign(k + 1, SparseOperator::zero(cfg.mode, ones(N, k), ones(N, k)));
    Rational fac_k1 = Rational(factorial_int(k - 1));
    Rational fac_k = Rational(factorial_int(k));
    for (int j = 1; j <= k; ++j) {
        SparseOperator q = SparseOperator::zero(cfg.mode, ones(N, k), ones(N, k));
        SparseOperator uj = q, dj = q;
        for (auto& A : index_subsets(N, k)) {
            // j-th largest entry
            int x = A[(int)A.size() - j];
            std::vector<int> rest;
            for (int v : A)
                if (v != x) rest.push_back(v);
            rest.push_back(x);
            SparseOperator dec = proj_P_tuple(rest, cfg);
            q = q + (e[1] * dec * e[1]).scaled(fac_k1);
            uj = uj + (e[1] * dec * Vk).scaled(fac_k1);
            dj = dj + (Vk * dec * e[1]).scaled(fac_k);
        }
        Q[j] = q;
        up[j] = uj;
        dn[j] = dj;
    }
}

SparseOperator NewtonZigZag::map_up(int l) const {
    return (e[l + 1] * e[l]).scaled(Rational(k - l));
}

SparseOperator NewtonZigZag::map_down(int l) const { return e[l - 1] * e[l]; }

std::vector<CheckItem> newton_checks(int N, int k) {
    std::vector<CheckItem> items;
    std::string tag = "N=" + std::to_string(N) + " k=" + std::to_string(k) + " ";
    auto eq = [](const SparseOperator& a, const SparseOperator& b) {
        bool ok = operator_equal(a, b);
        return std::make_pair(ok, ok ? std::string() : "lhs:\n" + a.dump() + "rhs:\n" + b.dump());
    };

    items.push_back({tag + "summand idempotents", [N, k] {
        NewtonZigZag z(N, k);
        for (int l = 1; l <= k; ++l)
            if (!is_idempotent(z.e[l]))
                return std::make_pair(false, "e_" + std::to_string(l) + " not idempotent");
        for (int j = 1; j <= k; ++j)
            if (!is_idempotent(z.Q[j]))
                return std::make_pair(false, "Q_" + std::to_string(j) + " not idempotent");
        return std::make_pair(true, std::string());
    }});

    items.push_back({tag + "no crossing terms: e_{l+2} e_{l+1} e_l = 0", [N, k] {
        NewtonZigZag z(N, k);
        for (int l = 1; l + 2 <= k; ++l) {
            if (!(z.e[l + 2] * z.e[l + 1] * z.e[l]).is_zero())
                return std::make_pair(false, "l=" + std::to_string(l) + " up-composite");
            if (!(z.e[l] * z.e[l + 1] * z.e[l + 2]).is_zero())
                return std::make_pair(false, "l=" + std::to_string(l) + " down-composite");
        }
        return std::make_pair(true, std::string());
    }});

    items.push_back({tag + "diagonal identity per summand", [N, k, eq] {
        NewtonZigZag z(N, k);
        for (int l = 2; l <= k; ++l) {
            SparseOperator lhs =
                (z.e[l] * z.e[l - 1] * z.e[l]).scaled(Rational(k - l + 1));
            if (l + 1 <= k)
                lhs = lhs + (z.e[l] * z.e[l + 1] * z.e[l]).scaled(Rational(k - l));
            auto r = eq(lhs, z.e[l]);
            if (!r.first) return std::make_pair(false, "l=" + std::to_string(l) + "\n" + r.second);
        }
        return std::make_pair(true, std::string());
    }});

    items.push_back({tag + "orthogonal bottom decomposition", [N, k, eq] {
        NewtonZigZag z(N, k);
        // e_1 = sum_j Q_j + (k-1) e_1 e_2 e_1
        SparseOperator rhs = (z.e[1] * z.e[2] * z.e[1]).scaled(Rational(k - 1));
        for (int j = 1; j <= k; ++j) rhs = rhs + z.Q[j];
        auto r = eq(z.e[1], rhs);
        if (!r.first) return r;
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                SparseOperator prod = z.Q[i] * z.Q[j];
                if (i == j ? !operator_equal(prod, z.Q[i]) : !prod.is_zero())
                    return std::make_pair(false, "Q products at " + std::to_string(i) + "," +
                                                     std::to_string(j));
            }
        return std::make_pair(true, std::string());
    }});

    items.push_back({tag + "bottom maps invert onto V_k copies", [N, k] {
        NewtonZigZag z(N, k);
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                SparseOperator comp = z.dn[i] * z.up[j];
                if (i == j ? !operator_equal(comp, z.Vk) : !comp.is_zero())
                    return std::make_pair(false, "d_i u_j at " + std::to_string(i) + "," +
                                                     std::to_string(j));
            }
        for (int j = 1; j <= k; ++j)
            if (!operator_equal(z.up[j] * z.dn[j], z.Q[j]))
                return std::make_pair(false, "u_j d_j != Q_j at j=" + std::to_string(j));
        return std::make_pair(true, std::string());
    }});

    items.push_back({tag + "assembled zig-zag is an isomorphism", [N, k] {
        NewtonZigZag z(N, k);
        std::vector<int> left, right;
        for (int l = 1; l <= k; l += 2) left.push_back(l);
        for (int l = 2; l <= k; l += 2) right.push_back(l);
        SparseOperator zero = SparseOperator::zero(Mode::Zeta, ones(N, k), ones(N, k));

        // g.f blocks over the odd summands
        for (int li : left)
            for (int lj : left) {
                SparseOperator acc = zero;
                if (li == 1 && lj == 1)
                    for (int j = 1; j <= k; ++j) acc = acc + z.up[j] * z.dn[j];
                for (int r : right) {
                    if (!(r == lj + 1 || r == lj - 1)) continue;
                    if (!(li == r + 1 || li == r - 1)) continue;
                    SparseOperator f = (r == lj + 1) ? z.map_up(lj) : z.map_down(lj);
                    SparseOperator g = (li == r + 1) ? z.map_up(r) : z.map_down(r);
                    acc = acc + g * f;
                }
                if (li == lj ? !operator_equal(acc, z.e[li]) : !acc.is_zero())
                    return std::make_pair(false, "g.f block (" + std::to_string(li) + "," +
                                                     std::to_string(lj) + ")");
            }
        // f.g blocks over the even summands
        for (int ri : right)
            for (int rj : right) {
                SparseOperator acc = zero;
                for (int l : left) {
                    if (!(l == rj + 1 || l == rj - 1)) continue;
                    if (!(ri == l + 1 || ri == l - 1)) continue;
                    SparseOperator g = (l == rj + 1) ? z.map_up(rj) : z.map_down(rj);
                    SparseOperator f = (ri == l + 1) ? z.map_up(l) : z.map_down(l);
                    acc = acc + f * g;
                }
                if (ri == rj ? !operator_equal(acc, z.e[ri]) : !acc.is_zero())
                    return std::make_pair(false, "f.g block (" + std::to_string(ri) + "," +
                                                     std::to_string(rj) + ")");
            }
        // f.g blocks mixing the bottom copies with the even summands
        if (k >= 2) {
            for (int j = 1; j <= k; ++j) {
                if (!(z.dn[j] * z.map_down(2)).is_zero())
                    return std::make_pair(false, "f.g bottom<-R2 at j=" + std::to_string(j));
                if (!(z.map_up(1) * z.up[j]).is_zero())
                    return std::make_pair(false, "f.g R2<-bottom at j=" + std::to_string(j));
            }
        }
        // f.g on the bottom block
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                SparseOperator comp = z.dn[i] * z.up[j];
                if (i == j ? !operator_equal(comp, z.Vk) : !comp.is_zero())
                    return std::make_pair(false, std::string("f.g bottom block"));
            }
        return std::make_pair(true, std::string());
    }});

    items.push_back({tag + "intertwiner criterion for all maps", [N, k] {
        NewtonZigZag z(N, k);
        for (int l = 1; l < k; ++l) {
            SparseOperator f = z.map_up(l);
            if (!operator_equal(z.e[l + 1] * f * z.e[l], f))
                return std::make_pair(false, "up map at l=" + std::to_string(l));
        }
        for (int l = 2; l <= k; ++l) {
            SparseOperator f = z.map_down(l);
            if (!operator_equal(z.e[l - 1] * f * z.e[l], f))
                return std::make_pair(false, "down map at l=" + std::to_string(l));
        }
        for (int j = 1; j <= k; ++j) {
            if (!operator_equal(z.e[1] * z.up[j] * z.Vk, z.up[j]))
                return std::make_pair(false, "u_j at j=" + std::to_string(j));
            if (!operator_equal(z.Vk * z.dn[j] * z.e[1], z.dn[j]))
                return std::make_pair(false, "d_j at j=" + std::to_string(j));
        }
        return std::make_pair(true, std::string());
    }});

    return items;
}

std::vector<CheckItem> kN_remark_checks(int N) {
    std::vector<CheckItem> items;
    std::string tag = "N=" + std::to_string(N) + " ";
    items.push_back({tag + "wrap-conjugated V_N family decomposes the l=0 block", [N] {
        EvalConfig cfg{N, Mode::Zeta};
        SparseOperator vn = proj_clasp_anti(N, cfg);
        std::vector<SparseOperator> R;
        for (int x = 1; x <= N; ++x) {
            SparseOperator wp = evaluate(wrap_expr(Mode::Zeta, N, N, N, x), cfg);
            SparseOperator wm = evaluate(wrap_expr(Mode::Zeta, N, N, N, -x), cfg);
            R.push_back(wm * vn * wp);
        }
        for (int i = 0; i < N; ++i) {
            if (!is_idempotent(R[i])) return std::make_pair(false, std::string("not idempotent"));
            for (int j = 0; j < N; ++j)
                if (i != j && !(R[i] * R[j]).is_zero())
                    return std::make_pair(false, std::string("not orthogonal"));
        }
        SparseOperator sum = SparseOperator::zero(cfg.mode, ones(N, N), ones(N, N));
        for (auto& r : R) sum = sum + r;
        NewtonZigZag z(N, N);
        SparseOperator expect = z.e[1] - (z.e[1] * z.e[2] * z.e[1]).scaled(Rational(N - 1));
        bool ok = operator_equal(sum, expect);
        return std::make_pair(ok, ok ? std::string() : "sum mismatch");
    }});
    items.push_back({tag + "delta relation V_N (id (x) D^{k-l}) V_N = delta V_N", [N] {
        EvalConfig cfg{N, Mode::Zeta};
        SparseOperator vn = proj_clasp_anti(N, cfg);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                SparseOperator w = evaluate(wrap_expr(Mode::Zeta, N, N, N, a - b), cfg);
                SparseOperator got = vn * w * vn;
                bool want_vn = a == b;
                if (want_vn ? !operator_equal(got, vn) : !got.is_zero())
                    return std::make_pair(false, "at (k,l)=(" + std::to_string(a) + "," +
                                                     std::to_string(b) + ")");
            }
        return std::make_pair(true, std::string());
    }});
    return items;
}

} // namespace webcalc
