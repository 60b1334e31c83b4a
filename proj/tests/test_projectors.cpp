#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "webcalc/linalg.hpp"
#include "webcalc/projectors.hpp"

using namespace webcalc;

namespace {

// test-only permutation operator built directly on the basis, independent of
// the word calculus
SparseOperator perm_oracle(int N, const std::vector<int>& sigma, const EvalConfig& cfg) {
    int m = (int)sigma.size();
    SparseOperator r(cfg.mode, ones(N, m), ones(N, m));
    for (auto& idx : enumerate_basis(ones(N, m))) {
        BasisIndex t(m);
        for (int i = 0; i < m; ++i) t[sigma[i]] = idx[i];
        r.add_entry(t, idx, cfg.one());
    }
    return r;
}

// brute-force (anti)symmetrizer oracle: (1/m!) sum_sigma (sgn) sigma
SparseOperator symmetrizer_oracle(int N, int m, bool anti, const EvalConfig& cfg) {
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    SparseOperator acc = SparseOperator::zero(cfg.mode, ones(N, m), ones(N, m));
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (sigma[i] > sigma[j]) ++inv;
        Rational c = (anti && inv % 2) ? Rational(-1) : Rational(1);
        acc = acc + perm_oracle(N, sigma, cfg).scaled(c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc.scaled(Rational(1, factorial_int(m)));
}

} // namespace

TEST_CASE("eigenprojectors against the discrete Fourier oracle") {
    for (int N = 2; N <= 4; ++N) {
        EvalConfig cfg{N, Mode::Zeta};
        for (int k = 1; k <= N; ++k) {
            // P_a(zeta^b) = delta_ab: the evaluated projector picks color k
            SparseOperator pk = proj_P(k, cfg);
            for (int b = 1; b <= N; ++b) {
                Scalar got = pk.entry({Mask(1u << (b - 1))}, {Mask(1u << (b - 1))});
                CHECK(got == Scalar::make(Mode::Zeta, N, b == k ? Rational(1) : Rational(0)));
            }
        }
    }
}

TEST_CASE("extremal projector values from the paper") {
    EvalConfig cfg{2, Mode::Zeta};
    SparseOperator t2 = proj_T(2, cfg);
    // v_12 -> 0, v_11 -> v_11
    CHECK(t2.entry({0b01, 0b10}, {0b01, 0b10}).is_zero());
    CHECK(t2.entry({0b01, 0b01}, {0b01, 0b01}) == cfg.one());
    CHECK(rank(t2) == 2);
    for (int N = 2; N <= 4; ++N) {
        EvalConfig c{N, Mode::Zeta};
        for (int m = 1; m <= 5; ++m) CHECK(rank(proj_T(m, c)) == N);
    }
    // expansion into eigenprojector tensors at N=3, m=3
    EvalConfig c3{3, Mode::Zeta};
    SparseOperator sum = SparseOperator::zero(Mode::Zeta, ones(3, 3), ones(3, 3));
    for (int k = 1; k <= 3; ++k) sum = sum + proj_P_tuple({k, k, k}, c3);
    CHECK(operator_equal(sum, proj_T(3, c3)));
}

TEST_CASE("word-level recursions agree under evaluation") {
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg{N, Mode::Zeta};
        CHECK(operator_equal(evaluate(extremal_T_alt(Mode::Zeta, N, 3), cfg), proj_T(3, cfg)));
    }
    EvalConfig cfg{2, Mode::Zeta};
    CHECK(operator_equal(evaluate(extremal_T_alt(Mode::Zeta, 2, 4), cfg), proj_T(4, cfg)));
}

TEST_CASE("clasps against brute-force symmetrizer oracles") {
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg{N, Mode::Zeta};
        for (int m = 2; m <= 3; ++m) {
            CHECK(operator_equal(proj_clasp_sym(m, cfg), symmetrizer_oracle(N, m, false, cfg)));
            CHECK(operator_equal(proj_clasp_anti(m, cfg), symmetrizer_oracle(N, m, true, cfg)));
        }
        for (int m = 1; m <= N; ++m)
            CHECK(rank(proj_clasp_anti(m, cfg)) == (long)binomial_int(N, m));
        CHECK(proj_clasp_anti(N + 1, cfg).is_zero());
    }
}

TEST_CASE("orbit projectors and partition idempotents") {
    EvalConfig c2{2, Mode::Zeta};
    CHECK(rank(proj_orbit(2, c2)) == 2);
    EvalConfig c3{3, Mode::Zeta};
    CHECK(rank(proj_orbit(3, c3)) == 6);
    CHECK(is_idempotent(proj_orbit(3, c3)));
    // partition (m) coincides with T_m
    CHECK(operator_equal(proj_partition({3}, c2), proj_T(3, c2)));
    // brute-force orbit oracle ranks
    CHECK(rank(proj_partition({1, 1}, c2)) == 2);
    CHECK(rank(proj_partition({2, 1}, c2)) == 2);
    CHECK_THROWS(proj_partition({1, 1, 1}, c2)); // more parts than N
}

TEST_CASE("named projector lookup") {
    EvalConfig cfg{2, Mode::Zeta};
    CHECK(operator_equal(projector_by_key("T:3", cfg), proj_T(3, cfg)));
    CHECK(operator_equal(projector_by_key("P:2", cfg), proj_P(2, cfg)));
    CHECK(operator_equal(projector_by_key("Vclasp:2", cfg), proj_clasp_anti(2, cfg)));
    CHECK(operator_equal(projector_by_key("O:2", cfg), proj_orbit(2, cfg)));
    CHECK(operator_equal(projector_by_key("part:2+1", cfg), proj_partition({2, 1}, cfg)));
    CHECK_THROWS(projector_by_key("nope:1", cfg));
}

TEST_CASE("spanning-set dimension matches the content-count oracle at small size") {
    // N=2, n=2: contents (2,0),(0,2) have one tuple, (1,1) has two: 1+1+4 = 6
    EvalConfig cfg{2, Mode::Zeta};
    std::vector<SparseOperator> ops;
    std::vector<std::vector<int>> tuples{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (auto& eps : tuples)
        for (auto& epsp : tuples) {
            std::vector<int> ca(2, 0), cb(2, 0);
            for (int x : eps) ++ca[x - 1];
            for (int x : epsp) ++cb[x - 1];
            if (ca != cb) continue;
            std::vector<int> sigma(2, -1);
            std::vector<bool> used(2, false);
            for (int i = 0; i < 2; ++i)
                for (int r = 0; r < 2; ++r)
                    if (!used[r] && epsp[r] == eps[i]) {
                        sigma[i] = r;
                        used[r] = true;
                        break;
                    }
            ops.push_back(evaluate(permutation_expr(Mode::Zeta, 2, sigma), cfg) *
                          proj_P_tuple(eps, cfg));
        }
    CHECK(linear_span_dim(ops) == 6);
}
