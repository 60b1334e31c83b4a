#ifndef WEBCALC_CHECK_HPP
#define WEBCALC_CHECK_HPP

#include <functional>
#include <string>
#include <vector>

namespace webcalc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // failure diagnostics (operator dumps, counts)
    double millis = 0.0;
};

// A deferred check; suites collect these and may run them concurrently.
struct CheckItem {
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

std::vector<CheckResult> run_checks(std::vector<CheckItem> items, int jobs);

} // namespace webcalc

#endif
