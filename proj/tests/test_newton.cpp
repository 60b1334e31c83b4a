#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "webcalc/newton.hpp"
#include "webcalc/symfun.hpp"

using namespace webcalc;

TEST_CASE("zig-zag verification for small N and k") {
    for (int N = 2; N <= 3; ++N)
        for (int k = 2; k <= 4; ++k) {
            CAPTURE(N);
            CAPTURE(k);
            auto results = run_checks(newton_checks(N, k), 2);
            for (auto& r : results) {
                CAPTURE(r.name);
                CAPTURE(r.detail.substr(0, 300));
                CHECK(r.pass);
            }
        }
}

TEST_CASE("k = N remark") {
    for (int N = 2; N <= 3; ++N) {
        CAPTURE(N);
        auto results = run_checks(kN_remark_checks(N), 2);
        for (auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.detail.substr(0, 300));
            CHECK(r.pass);
        }
    }
}

TEST_CASE("character-level ranks at the p2 corner") {
    // character oracle for the N=2, k=2 example: p2 side has rank 2
    EvalConfig cfg{2, Mode::Zeta};
    CHECK(rank(proj_T(2, cfg)) == 2);
    NewtonZigZag z(2, 2);
    long lhs = rank(z.e[1]);
    long rhs = rank(z.e[2]);
    for (int j = 1; j <= 2; ++j) rhs += rank(z.Q[j]);
    CHECK(lhs == rhs);
}
