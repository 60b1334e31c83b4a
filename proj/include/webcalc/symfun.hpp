#ifndef WEBCALC_SYMFUN_HPP
#define WEBCALC_SYMFUN_HPP

#include <map>
#include <vector>
#include "webcalc/linalg.hpp"

namespace webcalc {

// Symmetric polynomials in X_1..X_N, carried as LaurentX values that are
// checked for invariance under the transposition generators on construction.
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(LaurentX p); // throws when not symmetric
    const LaurentX& poly() const { return p_; }
    bool operator==(const SymPoly& o) const { return p_ == o.p_; }
    std::string to_string() const { return p_.to_string(); }

    // expansion in elementary symmetric polynomials via the triangular
    // change of basis; returns exponent-vector -> coefficient, where the
    // exponent vector (a_1..a_N) stands for e_1^{a_1} ... e_N^{a_N}
    std::map<std::vector<int>, Rational> e_expansion() const;

private:
    LaurentX p_;
};

enum class SymKind { Elementary, Complete, PowerSum, Monomial };

// e_k, h_k, p_k or m_lambda in N variables
SymPoly sym_basis(SymKind kind, const std::vector<int>& param, int N);
SymPoly sym_e(int k, int N);
SymPoly sym_h(int k, int N);
SymPoly sym_p(int k, int N);
SymPoly sym_m(const std::vector<int>& lambda, int N);

// p_k = (-1)^{k-1} k e_k - sum_{j=1}^{k-1} (-1)^{k-j} e_{k-j} p_j
bool newton_identity_check(int k, int N);

// The weight-graded dimension of an idempotent's image: weight vector ->
// per-block rank. Requires an idempotent, weight-preserving operator.
using Character = std::map<std::vector<int>, long>;
Character character(const SparseOperator& e);

// Render a character with non-negative weights as a polynomial in X_1..X_N.
LaurentX character_poly(const Character& ch, int N);

long character_total(const Character& ch);

} // namespace webcalc

#endif
