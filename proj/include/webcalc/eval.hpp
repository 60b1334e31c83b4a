#ifndef WEBCALC_EVAL_HPP
#define WEBCALC_EVAL_HPP

#include "webcalc/sparse_op.hpp"

namespace webcalc {

// Configuration of one evaluation run. QGeneric evaluates planar webs over
// Laurent polynomials in q; Zeta and FormalX evaluate at q = 1 with wrap
// eigenvalues zeta^i and X_i respectively.
struct EvalConfig {
    int N = 2;
    Mode mode = Mode::Zeta;
    Scalar one() const { return Scalar::one(mode, N); }
    Scalar zero() const { return Scalar::zero(mode, N); }
    Scalar q(long e) const { return Scalar::q_power(mode, N, e); }
    // (-q)^e, with q = 1 outside QGeneric
    Scalar neg_q(long e) const;
    // eigenvalue of color i under the wrap, to the given power
    Scalar gamma(int i, long power) const { return Scalar::eigenvalue(mode, N, i, power); }
};

// The exact matrix assigned to a single generator. `ins` are the resolved
// input strands (needed by wraps and crossings).
SparseOperator generator_matrix(const Generator& g, const std::vector<Strand>& ins,
                                const EvalConfig& cfg);

SparseOperator evaluate(const WebWord& w, const EvalConfig& cfg);
SparseOperator evaluate(const WebExpr& e, const EvalConfig& cfg);

// Helpers used across the identity suites: plain merge/split/cap/cup and
// crossing matrices on explicit boundaries.
SparseOperator eval_id(const BoundaryObject& b, const EvalConfig& cfg);

} // namespace webcalc

#endif
