#ifndef WEBCALC_GL2_HPP
#define WEBCALC_GL2_HPP

#include "webcalc/check.hpp"
#include "webcalc/projectors.hpp"

namespace webcalc {

// The frozen diagram-to-word convention for the splitter and merge webs whose
// traveling legs cross the base segment. Calibrated once against the partial
// trace identity pTr_n(T_m) = lambda^n(T_{m-n}).
struct PartialTraceConvention {
    int leg = 2;      // which split output travels (1 = swap after splitting)
    int wrap = 0;     // wrap power on the traveling leg
    bool mirror = true; // merge web uses the inverse wrap
    bool unique = false;
    int satisfied = 0;
};

// S_n: (1^{pad}, 2^n) -> (1^{pad+2n}); local legs feed positions pad+1..pad+n,
// traveling legs land nested at positions pad+n+1..pad+2n.
SparseOperator splitter_web(int n, int pad, const PartialTraceConvention& c,
                            const EvalConfig& cfg);
SparseOperator merge_web(int n, int pad, const PartialTraceConvention& c,
                         const EvalConfig& cfg);

// pTr_n(W) = M_n (W (x) id_n) S_n for W on m one-labeled strands.
SparseOperator partial_trace(const SparseOperator& w, int n,
                             const PartialTraceConvention& c, const EvalConfig& cfg);

PartialTraceConvention calibrate_pTr();
// the calibrated convention, computed once
const PartialTraceConvention& ptr_convention();

std::vector<CheckItem> gl2rel_checks();
std::vector<CheckItem> gl2ptr_checks();
std::vector<CheckItem> gl2emn_checks();
std::vector<CheckItem> gl2skel_checks();

} // namespace webcalc

#endif
