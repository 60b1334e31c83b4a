#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "webcalc/projectors.hpp"
#include "webcalc/symfun.hpp"

using namespace webcalc;

TEST_CASE("symmetric polynomial bases") {
    CHECK(sym_e(2, 2).poly() == LaurentX::variable(2, 1) * LaurentX::variable(2, 2));
    LaurentX p2 = LaurentX::variable(2, 1, 2) + LaurentX::variable(2, 2, 2);
    CHECK(sym_p(2, 2).poly() == p2);
    LaurentX h2 = LaurentX::variable(2, 1, 2) + LaurentX::variable(2, 2, 2) +
                  LaurentX::variable(2, 1) * LaurentX::variable(2, 2);
    CHECK(sym_h(2, 2).poly() == h2);
    CHECK(sym_m({1, 1}, 2).poly() == sym_e(2, 2).poly());
    CHECK_THROWS(SymPoly(LaurentX::variable(2, 1))); // not symmetric
}

TEST_CASE("Newton identities") {
    // hand instance: p2 = -2 e2 + e1 p1 at N=2
    LaurentX lhs = sym_p(2, 2).poly();
    LaurentX rhs = sym_e(2, 2).poly() * LaurentX(2, Rational(-2)) +
                   sym_e(1, 2).poly() * sym_p(1, 2).poly();
    CHECK(lhs == rhs);
    for (int N = 2; N <= 4; ++N)
        for (int k = 1; k <= 6; ++k) CHECK(newton_identity_check(k, N));
}

TEST_CASE("characters of the named idempotents") {
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg{N, Mode::Zeta};
        for (int m = 1; m <= 4; ++m) {
            CHECK(character_poly(character(proj_T(m, cfg)), N) == sym_p(m, N).poly());
            CHECK(character_poly(character(proj_clasp_sym(m, cfg)), N) == sym_h(m, N).poly());
        }
        for (int m = 1; m <= N; ++m)
            CHECK(character_poly(character(proj_clasp_anti(m, cfg)), N) == sym_e(m, N).poly());
        for (int n = 1; n <= N; ++n) {
            LaurentX expect = sym_e(n, N).poly() * LaurentX(N, Rational(factorial_int(n)));
            CHECK(character_poly(character(proj_orbit(n, cfg)), N) == expect);
        }
    }
}

TEST_CASE("character rejects bad inputs") {
    EvalConfig cfg{2, Mode::Zeta};
    SparseOperator s = evaluate(crossing_expr(Mode::Zeta, 2, 2, 1), cfg);
    SparseOperator not_idem = s.scaled(Rational(2)); // (2s)^2 = 4 != 2s
    CHECK_THROWS(character(not_idem));
    // weight-breaking operator: v_11 -> v_22
    SparseOperator bad(Mode::Zeta, ones(2, 2), ones(2, 2));
    bad.add_entry({0b10, 0b10}, {0b01, 0b01}, cfg.one());
    bad.add_entry({0b01, 0b01}, {0b01, 0b01}, cfg.one());
    CHECK_THROWS(weight_block_ranks(bad));
}

TEST_CASE("expansion in the elementary basis") {
    // p2 = e1^2 - 2 e2; h2 = e1^2 - e2
    auto exp_p2 = sym_p(2, 2).e_expansion();
    CHECK(exp_p2[{2, 0}] == Rational(1));
    CHECK(exp_p2[{0, 1}] == Rational(-2));
    auto exp_h2 = sym_h(2, 3).e_expansion();
    CHECK(exp_h2[{2, 0, 0}] == Rational(1));
    CHECK(exp_h2[{0, 1, 0}] == Rational(-1));
    // reconstruction round trip
    LaurentX rebuilt(3);
    for (auto& [expo, c] : exp_h2) {
        LaurentX term(3, c);
        for (int i = 0; i < 3; ++i)
            for (int t = 0; t < expo[i]; ++t) term = term * sym_e(i + 1, 3).poly();
        rebuilt = rebuilt + term;
    }
    CHECK(rebuilt == sym_h(2, 3).poly());
}

TEST_CASE("total character mass equals rank") {
    EvalConfig cfg{3, Mode::Zeta};
    SparseOperator t3 = proj_T(3, cfg);
    CHECK(character_total(character(t3)) == rank(t3));
}
