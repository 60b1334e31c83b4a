#ifndef WEBCALC_SUITES_HPP
#define WEBCALC_SUITES_HPP

#include "webcalc/check.hpp"

namespace webcalc {

struct SuiteOptions {
    int N_lo = 2, N_hi = 2;
    int k_lo = 2, k_hi = 4;
    int jobs = 1;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> items;
    bool all_pass() const {
        for (auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

// Suite names: webrel, reid, tm, end2, newton, chars, gl2rel, gl2ptr,
// gl2emn, gl2skel, spanning, all.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

std::string report_to_json(const SuiteReport& r, bool with_timings);
std::string report_to_text(const SuiteReport& r);

// Per-criterion building blocks reused by the acceptance binary.
std::vector<CheckItem> webrel_checks(int N);
std::vector<CheckItem> reid_checks(int N);
std::vector<CheckItem> tm_checks(int N);
std::vector<CheckItem> essential_quotient_checks(int N);
std::vector<CheckItem> chars_checks();
std::vector<CheckItem> spanning_checks(int N);

} // namespace webcalc

#endif
