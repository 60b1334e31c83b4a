#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "webcalc/end2.hpp"

using namespace webcalc;

TEST_CASE("basic elements of the 2-strand algebra") {
    End2Context ctx(2);
    EvalConfig cfg{2, Mode::Zeta};
    // u(v1 (x) v2) = v1 (x) v2 - v2 (x) v1, built by hand from the phi formulas
    BasisIndex v12{0b01, 0b10}, v21{0b10, 0b01};
    CHECK(ctx.u.entry(v12, v12) == cfg.one());
    CHECK(ctx.u.entry(v21, v12) == -cfg.one());
    CHECK(ctx.u.entry(v12, {0b01, 0b01}).is_zero());
    // D2 on wedge{1,2} at N=2 multiplies by zeta^1 zeta^2 = -1
    CHECK(ctx.D2.entry({0b11}, {0b11}) == Scalar::make(Mode::Zeta, 2, Rational(-1)));
    // E_k vanishes below N
    CHECK(ctx.E(1).is_zero());
    CHECK(!ctx.E(2).is_zero());
}

TEST_CASE("B1 calibration and the identity chain") {
    for (int N = 2; N <= 5; ++N) {
        CAPTURE(N);
        auto items = end2_checks(N);
        auto results = run_checks(std::move(items), 2);
        for (auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.detail.substr(0, 400));
            CHECK(r.pass);
        }
    }
}
