#ifndef WEBCALC_PROJECTORS_HPP
#define WEBCALC_PROJECTORS_HPP

#include "webcalc/eval.hpp"

namespace webcalc {

// ---- word-level building blocks on m parallel 1-labeled strands ----

// crossing s_i (1 <= i <= m-1); the seam crossing s_m is built separately
WebExpr crossing_expr(Mode mode, int N, int m, int i);
// dumbbell u_i = split . merge through a 2-labeled edge
WebExpr dumbbell_expr(Mode mode, int N, int m, int i);
// full wrap w_i^p of strand i
WebExpr wrap_expr(Mode mode, int N, int m, int i, long p);
// global rotation D^p
WebExpr rotate_expr(Mode mode, int N, int m, long p);
// seam crossing s_m = D^{-1} s_{m-1} D
WebExpr seam_crossing_expr(Mode mode, int N, int m);
// u_i for the seam index via s_m
WebExpr seam_dumbbell_expr(Mode mode, int N, int m);

// word for an arbitrary permutation of m 1-labeled strands, as a product of
// adjacent crossings; perm[i] = target position (0-based) of strand i.
WebExpr permutation_expr(Mode mode, int N, const std::vector<int>& perm);

// ---- the paper's idempotents, word level ----

// P_k(D) = (1/N) sum_j zeta^{-kj} D^j on one strand (Zeta mode only)
WebExpr eigenprojector_P(int N, int k);
// T_1 = id, T_2 = (1/N) sum_k D^{-k} (x) D^k, T_{m+1} = (id (x) T_2)(T_m (x) id)
WebExpr extremal_T(Mode mode, int N, int m);
// T_m = (T_{m-1} (x) id) s_{m-1} (T_{m-1} (x) id), m >= 3
WebExpr extremal_T_alt(Mode mode, int N, int m);
// symmetric clasp: recursion with -m/(m+1) correction
WebExpr clasp_sym(Mode mode, int N, int m);
// antisymmetric clasp: 1/m! times merge-through-split of an m-labeled edge
WebExpr clasp_anti(Mode mode, int N, int m);

WebExpr lambda_shift(const WebExpr& e);
WebExpr lambda_star(const WebExpr& e);

// ---- operator-level construction with caching ----

SparseOperator proj_T(int m, const EvalConfig& cfg);
SparseOperator proj_P(int k, const EvalConfig& cfg);       // on one strand
SparseOperator proj_clasp_sym(int m, const EvalConfig& cfg);
SparseOperator proj_clasp_anti(int m, const EvalConfig& cfg);
SparseOperator proj_orbit(int n, const EvalConfig& cfg);
SparseOperator proj_partition(const std::vector<int>& lambda, const EvalConfig& cfg);

// tensor product of eigenprojectors P_{ks[0]} (x) ... (x) P_{ks[m-1]}
SparseOperator proj_P_tuple(const std::vector<int>& ks, const EvalConfig& cfg);

// Named lookup for the CLI: "T:3", "P:2", "Vclasp:2", "Pclasp:3", "O:3",
// "part:2+1". Throws on unknown keys.
SparseOperator projector_by_key(const std::string& key, const EvalConfig& cfg);

} // namespace webcalc

#endif
