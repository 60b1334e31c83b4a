#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "webcalc/gl2.hpp"

using namespace webcalc;

static void run_all(std::vector<CheckItem> items) {
    auto results = run_checks(std::move(items), 2);
    for (auto& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.detail.substr(0, 300));
        // the r = m = n instance of the split-merge expansion is false as stated;
        // the suite keeps it red by design (see the lemma analysis)
        bool expected = r.name.find("r = m = n") == std::string::npos;
        CHECK(r.pass == expected);
    }
}

TEST_CASE("gl2 relation suite") { run_all(gl2rel_checks()); }
TEST_CASE("partial trace calibration and collapse") { run_all(gl2ptr_checks()); }
TEST_CASE("e_{m,n} suite") { run_all(gl2emn_checks()); }
TEST_CASE("skeleton dimensions") { run_all(gl2skel_checks()); }
