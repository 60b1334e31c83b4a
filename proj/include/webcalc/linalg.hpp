#ifndef WEBCALC_LINALG_HPP
#define WEBCALC_LINALG_HPP

#include <map>
#include <vector>
#include "webcalc/sparse_op.hpp"

namespace webcalc {

// Exact rank over Q(zeta_N) (or over Q for constant entries) by fraction-free
// Bareiss elimination. FORMAL_X operators are rejected: Laurent polynomials
// form no field.
long rank(const SparseOperator& op);

// Rank of a dense matrix over Q(zeta); rows need not share length semantics
// with any operator.
long rank_dense(std::vector<std::vector<Cyclotomic>> m);

bool is_idempotent(const SparseOperator& op);
bool is_weight_preserving(const SparseOperator& op);

// Per-weight-block ranks of a weight-preserving operator.
std::map<std::vector<int>, long> weight_block_ranks(const SparseOperator& op);

// Dimension of the scalar-linear span of flattened operators. In FORMAL_X
// mode the span is taken over Q with X-monomials as independent coordinates.
long linear_span_dim(const std::vector<SparseOperator>& ops);

} // namespace webcalc

#endif
