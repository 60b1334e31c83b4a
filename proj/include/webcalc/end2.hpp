#ifndef WEBCALC_END2_HPP
#define WEBCALC_END2_HPP

#include "webcalc/check.hpp"
#include "webcalc/projectors.hpp"

namespace webcalc {

// Operator realizations of the endomorphism algebra of the 2-labeled strand
// and of the pair of 1-labeled strands, at q = 1 with zeta eigenvalues.
struct End2Context {
    EvalConfig cfg;
    SparseOperator id11, u, s, t, v, D, Dinv; // on two 1-labeled strands
    SparseOperator M, S;                      // merge (1,1)->(2), split back
    SparseOperator id2, D2, D2inv;            // on the 2-labeled strand
    explicit End2Context(int N);

    SparseOperator E(int k) const;        // e_k(gamma) id on the 2-strand
    SparseOperator R(int k) const;        // R_{2k-1} = t s t ... t (2k-1 factors)
    SparseOperator Ssum(int x) const;     // S_x = sum_{k=1}^x R_{2k-1}
    SparseOperator T2() const;
};

struct B1Calibration {
    int leg = 0;      // which split output travels (1 or 2)
    int power = 0;    // wrap power on the traveling leg
    bool unique = false;
    int satisfied = 0; // number of candidates meeting the constraint
    SparseOperator B1;
};

// Select B1 among the candidate realizations M . wrap(leg)^{power} . S by the
// defining role vu = D^{-1} S B1 M (and its k=3 companion uvu = D^{-2} S B1^2 M).
B1Calibration calibrate_B1(int N);

// A_k over the calibrated B1 and D2: A_1 = 0, A_2 = id, A_3 = B1,
// A_4 = B1^2 - D2, A_k = B1 A_{k-1} - A_{k-2} D2.
SparseOperator end2_A(int k, const End2Context& ctx, const B1Calibration& cal);

// X_n = D^{1-n} S A_{n+1} M and its expansion Y_n in the words u and v.
SparseOperator end2_X(int n, const End2Context& ctx, const B1Calibration& cal);
SparseOperator end2_Y(int n, const End2Context& ctx);

std::vector<CheckItem> end2_checks(int N);

} // namespace webcalc

#endif
