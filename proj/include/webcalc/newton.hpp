#ifndef WEBCALC_NEWTON_HPP
#define WEBCALC_NEWTON_HPP

#include "webcalc/check.hpp"
#include "webcalc/projectors.hpp"

namespace webcalc {

// The zig-zag between the odd and even columns of V_{k-l} (x) T_l summands.
// Summand idempotents are indexed by the T-block size l; the l = 0 end is
// the k-fold family of V_k copies cut out by eigenprojector decorations.
struct NewtonZigZag {
    int N, k;
    EvalConfig cfg;
    std::vector<SparseOperator> e;  // e[l] = V_{k-l} (x) T_l for l = 1..k (e[0] unused)
    std::vector<SparseOperator> Q;  // Q[j], j = 1..k: bottom idempotents (l = 0)
    std::vector<SparseOperator> up; // u[j]: (k, V_k) copy j -> V_{k-1} (x) T_1
    std::vector<SparseOperator> dn; // d[j]: V_{k-1} (x) T_1 -> (k, V_k) copy j
    SparseOperator Vk;              // the bottom object's idempotent

    NewtonZigZag(int N, int k);
    SparseOperator map_up(int l) const;   // (k-l) e_{l+1} e_l, for 1 <= l < k
    SparseOperator map_down(int l) const; // e_{l-1} e_l, for 2 <= l <= k
};

std::vector<CheckItem> newton_checks(int N, int k);
std::vector<CheckItem> kN_remark_checks(int N);

} // namespace webcalc

#endif
