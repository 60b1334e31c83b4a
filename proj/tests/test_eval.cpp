#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "webcalc/linalg.hpp"
#include "webcalc/projectors.hpp"

using namespace webcalc;

namespace {

EvalConfig qcfg(int N) { return EvalConfig{N, Mode::QGeneric}; }
EvalConfig zcfg(int N) { return EvalConfig{N, Mode::Zeta}; }
EvalConfig xcfg(int N) { return EvalConfig{N, Mode::FormalX}; }

Scalar qbinom(int n, int k) { return Scalar::from_q(quantum_binomial(n, k)); }

SparseOperator scalar_op(const EvalConfig& cfg, Scalar v) {
    SparseOperator r(cfg.mode, BoundaryObject{cfg.N, {}}, BoundaryObject{cfg.N, {}});
    r.add_entry({}, {}, v);
    return r;
}

// closed circle of label k: cupL then capR (planar)
SparseOperator circle(int k, bool ccw, const EvalConfig& cfg) {
    BoundaryObject empty{cfg.N, {}};
    WebWord cup = word_gen(empty, 1, GCup{k, ccw});
    WebWord cap = word_gen(cup.tgt, 1, GCap{k, !ccw});
    return evaluate(word_compose(cap, cup), cfg);
}

// essential circle of label k: cup, wrap the upward leg once, cap
SparseOperator essential_circle(int k, const EvalConfig& cfg) {
    BoundaryObject empty{cfg.N, {}};
    WebWord cup = word_gen(empty, 1, GCup{k, true});
    WebWord wrap = word_gen(cup.tgt, 1, GWrap{1}, true);
    WebWord cap = word_gen(wrap.tgt, 1, GCap{k, false});
    return evaluate(word_compose(cap, word_compose(wrap, cup)), cfg);
}

BasisIndex bi(std::initializer_list<Mask> ms) { return BasisIndex(ms); }

} // namespace

TEST_CASE("merge and split examples") {
    EvalConfig cfg = zcfg(2);
    SparseOperator m = generator_matrix(GMerge{1, 1}, {}, cfg);
    // v_{2} (x) v_{1} -> -v_{12} at q=1 (one inversion)
    CHECK(m.entry(bi({0b11}), bi({0b10, 0b01})) == Scalar::make(Mode::Zeta, 2, Rational(-1)));
    CHECK(m.entry(bi({0b11}), bi({0b01, 0b10})) == Scalar::make(Mode::Zeta, 2, Rational(1)));
    // diagonal-overlap kills
    CHECK(m.entry(bi({0b11}), bi({0b01, 0b01})).is_zero());
}

TEST_CASE("merge or split beyond N evaluates to zero") {
    EvalConfig cfg = zcfg(2);
    SparseOperator m = generator_matrix(GMerge{2, 1}, {}, cfg);
    CHECK(m.is_zero());
}

TEST_CASE("bigon relation: merge after split") {
    for (int N = 2; N <= 4; ++N) {
        EvalConfig cfg = qcfg(N);
        for (int k = 1; k < N; ++k)
            for (int l = 1; k + l <= N; ++l) {
                BoundaryObject b{N, {Strand{k + l, true}}};
                SparseOperator split = generator_matrix(GSplit{k, l}, {}, cfg);
                SparseOperator merge = generator_matrix(GMerge{k, l}, {}, cfg);
                CHECK(operator_equal(merge * split,
                                     eval_id(b, cfg).scaled(qbinom(k + l, k))));
            }
    }
}

TEST_CASE("circle values") {
    // 1-circle at N=2 is q + q^-1, both orientations; k-circle is [N over k]
    for (int N = 2; N <= 4; ++N) {
        EvalConfig cfg = qcfg(N);
        for (int k = 1; k <= N; ++k) {
            CHECK(operator_equal(circle(k, true, cfg), scalar_op(cfg, qbinom(N, k))));
            CHECK(operator_equal(circle(k, false, cfg), scalar_op(cfg, qbinom(N, k))));
        }
    }
    EvalConfig cfg2 = qcfg(2);
    CHECK(operator_equal(circle(1, true, cfg2),
                         scalar_op(cfg2, Scalar::from_q(quantum_int(2)))));
}

TEST_CASE("wrap eigenvalues and rotation") {
    // Wrap on the 2-labeled strand carrying v_{12}, N=2: zeta^1 * zeta^2 = -1
    EvalConfig cfg = zcfg(2);
    SparseOperator w = generator_matrix(GWrap{1}, {Strand{2, true}}, cfg);
    CHECK(w.entry(bi({0b11}), bi({0b11})) == Scalar::from_zeta(Cyclotomic(2, Rational(-1))));
    // crossing at q=1 is the transposition
    SparseOperator x = generator_matrix(GCross{1, 1, +1}, {}, cfg);
    CHECK(x.entry(bi({0b10, 0b01}), bi({0b01, 0b10})) == cfg.one());
    CHECK(x.entry(bi({0b01, 0b01}), bi({0b01, 0b01})) == cfg.one());
    // D^N = id on a single strand
    for (int N = 2; N <= 6; ++N) {
        EvalConfig c = zcfg(N);
        SparseOperator rot = generator_matrix(GRot{1}, {Strand{1, true}}, c);
        CHECK(operator_equal(rot.power(N), eval_id(ones(N, 1), c)));
    }
    // annular generators are rejected at generic q
    CHECK_THROWS(generator_matrix(GWrap{1}, {Strand{1, true}}, qcfg(2)));
}

TEST_CASE("essential circles") {
    // FORMAL_X: k-labeled essential circle evaluates to e_k(X)
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg = xcfg(N);
        for (int k = 1; k <= N; ++k) {
            SparseOperator c = essential_circle(k, cfg);
            // compare against e_k(X) built directly
            LaurentX ek(N);
            for (Mask S : subsets_of_size(N, k)) {
                LaurentX m(N, Rational(1));
                for (int i : mask_colors(S)) m = m * LaurentX::variable(N, i);
                ek = ek + m;
            }
            CHECK(c.entry({}, {}) == Scalar::from_x(ek));
        }
    }
    // ZETA: 0 for 0<k<N and (-1)^{N-1} for k=N
    for (int N = 2; N <= 6; ++N) {
        EvalConfig cfg = zcfg(N);
        for (int k = 1; k < N; ++k) CHECK(essential_circle(k, cfg).is_zero());
        Rational expect = (N % 2 == 1) ? Rational(1) : Rational(-1);
        CHECK(essential_circle(N, cfg).entry({}, {}) ==
              Scalar::make(Mode::Zeta, N, expect));
    }
}

TEST_CASE("Reidemeister I curls are scalar with the realized framing") {
    // The braiding generated by the displayed 1-1 crossing curls by
    // q^{+-k(2k-1-N)}; this agrees with the q^{-+k(N-1)} of the web calculus
    // at k = 1 and k = N (the general exponent is asserted here, the suite
    // asserts the stated one).
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg = qcfg(N);
        for (int k = 1; k <= 2; ++k) {
            BoundaryObject b{N, {Strand{k, true}}};
            SparseOperator cup = eval_id(b, cfg).kron(generator_matrix(GCup{k, true}, {}, cfg));
            SparseOperator cap = eval_id(b, cfg).kron(generator_matrix(GCap{k, false}, {}, cfg));
            for (int sign : {+1, -1}) {
                SparseOperator x = generator_matrix(GCross{k, k, sign}, {}, cfg);
                SparseOperator kink =
                    cap * x.kron(eval_id(BoundaryObject{N, {Strand{k, false}}}, cfg)) * cup;
                long e = (long)sign * k * (2 * k - 1 - N);
                CHECK(operator_equal(kink, eval_id(b, cfg).scaled(cfg.q(e))));
                if (k == 1 || k == N) {
                    long paper = (long)k * (N - 1);
                    bool ok = operator_equal(kink, eval_id(b, cfg).scaled(cfg.q(paper))) ||
                              operator_equal(kink, eval_id(b, cfg).scaled(cfg.q(-paper)));
                    CHECK(ok);
                }
            }
        }
    }
}

TEST_CASE("Reidemeister II and III, forkslide") {
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg = qcfg(N);
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
                SparseOperator xp = generator_matrix(GCross{k, l, +1}, {}, cfg);
                SparseOperator xm = generator_matrix(GCross{l, k, -1}, {}, cfg);
                BoundaryObject b{N, {Strand{k, true}, Strand{l, true}}};
                CHECK(operator_equal(xm * xp, eval_id(b, cfg)));
            }
        // RIII on labels (k,l,m), all <= 2
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                for (int m = 1; m <= 2; ++m) {
                    auto X = [&](int a, int b2) {
                        return generator_matrix(GCross{a, b2, +1}, {}, cfg);
                    };
                    auto I = [&](int a) {
                        return eval_id(BoundaryObject{N, {Strand{a, true}}}, cfg);
                    };
                    SparseOperator lhs =
                        X(l, m).kron(I(k)) * I(l).kron(X(k, m)) * X(k, l).kron(I(m));
                    SparseOperator rhs =
                        I(m).kron(X(k, l)) * X(k, m).kron(I(l)) * I(k).kron(X(l, m));
                    CHECK(operator_equal(lhs, rhs));
                }
        // forkslide: a strand crosses a split vertex
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                for (int m = 1; m <= 2; ++m)
                    for (int sign : {+1, -1}) {
                        auto I = [&](int a) {
                            return eval_id(BoundaryObject{N, {Strand{a, true}}}, cfg);
                        };
                        SparseOperator split = generator_matrix(GSplit{k, l}, {}, cfg);
                        SparseOperator a =
                            generator_matrix(GCross{k, m, sign}, {}, cfg).kron(I(l)) *
                            I(k).kron(generator_matrix(GCross{l, m, sign}, {}, cfg)) *
                            split.kron(I(m));
                        SparseOperator b =
                            I(m).kron(split) *
                            generator_matrix(GCross{k + l, m, sign}, {}, cfg);
                        CHECK(operator_equal(a, b));
                    }
    }
}

TEST_CASE("mixed-orientation RII via bent crossings") {
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg = qcfg(N);
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
                SparseOperator xp = generator_matrix(GCross{k, l, +1, false, true}, {}, cfg);
                SparseOperator xm = generator_matrix(GCross{l, k, -1, true, false}, {}, cfg);
                BoundaryObject b{N, {Strand{k, false}, Strand{l, true}}};
                CHECK(operator_equal(xm * xp, eval_id(b, cfg)));
                SparseOperator yp = generator_matrix(GCross{k, l, +1, true, false}, {}, cfg);
                SparseOperator ym = generator_matrix(GCross{l, k, -1, false, true}, {}, cfg);
                BoundaryObject b2{N, {Strand{k, true}, Strand{l, false}}};
                CHECK(operator_equal(ym * yp, eval_id(b2, cfg)));
            }
    }
}

TEST_CASE("down-down crossings and mixed-boundary rotation") {
    // RII for two downward strands via the doubly-bent crossings
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg{N, Mode::QGeneric};
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
                SparseOperator xp = generator_matrix(GCross{k, l, +1, false, false}, {}, cfg);
                SparseOperator xm = generator_matrix(GCross{l, k, -1, false, false}, {}, cfg);
                BoundaryObject b{N, {Strand{k, false}, Strand{l, false}}};
                CHECK(operator_equal(xm * xp, eval_id(b, cfg)));
            }
    }
    // rotation of a (1,2)-labeled boundary: phase is the product of colors
    EvalConfig zc{3, Mode::Zeta};
    BoundaryObject b{3, {Strand{1, true}, Strand{2, true}}};
    SparseOperator rot = generator_matrix(GRot{1}, b.strands, zc);
    Scalar got = rot.entry({0b11, 0b100}, {0b100, 0b11});
    CHECK(got == Scalar::from_zeta(Cyclotomic::zeta_power(3, 3)));
    SparseOperator inv = generator_matrix(GRot{-1}, rot.tgt().strands, zc);
    CHECK(operator_equal(inv * rot, eval_id(b, zc)));
}

TEST_CASE("functoriality: compose to product, tensor to Kronecker") {
    std::mt19937 rng(3);
    int N = 2;
    EvalConfig cfg = zcfg(N);
    auto random_word = [&](int strands) {
        WebWord w = word_identity(ones(N, strands), true);
        std::uniform_int_distribution<int> pick(0, 3);
        for (int step = 0; step < 3; ++step) {
            int which = pick(rng);
            BoundaryObject cur = w.tgt;
            if ((int)cur.strands.size() < 2) which = 3;
            std::vector<PlacedGen> gens;
            if (which == 0) gens = {PlacedGen{1, GCross{1, 1, +1}}};
            else if (which == 1) gens = {PlacedGen{1, GWrap{1}}};
            else if (which == 2) gens = {PlacedGen{1, GRot{1}}};
            else gens = {PlacedGen{1, GWrap{-1}}};
            bool ok = true;
            for (auto& pg : gens) {
                if (std::holds_alternative<GCross>(pg.g)) {
                    if (cur.strands.size() < 2 || cur.strands[0].label != 1 ||
                        cur.strands[1].label != 1)
                        ok = false;
                }
            }
            if (!ok) continue;
            Slice sl = make_slice(cur, gens);
            w.slices.push_back(sl);
            w.tgt = sl.tgt;
        }
        return w;
    };
    auto has_rot = [](const WebWord& w) {
        for (auto& sl : w.slices)
            for (auto& pg : sl.gens)
                if (std::holds_alternative<GRot>(pg.g)) return true;
        return false;
    };
    for (int rep = 0; rep < 10; ++rep) {
        WebWord a = random_word(2), b = random_word(2);
        if (!(a.src == b.tgt)) continue;
        CHECK(operator_equal(evaluate(word_compose(a, b), cfg),
                             evaluate(a, cfg) * evaluate(b, cfg)));
        WebWord c = random_word(1);
        if (has_rot(a) || has_rot(c)) continue;
        if (c.tgt == c.src && a.tgt == a.src)
            CHECK(operator_equal(evaluate(word_tensor(a, c), cfg),
                                 evaluate(a, cfg).kron(evaluate(c, cfg))));
    }
    // interchange law after evaluation
    WebExpr s = crossing_expr(Mode::Zeta, N, 2, 1);
    WebExpr wrap = wrap_expr(Mode::Zeta, N, 1, 1, 1);
    WebExpr lhs = compose(tensor(s, wrap), tensor(s, wrap));
    WebExpr rhs = tensor(compose(s, s), compose(wrap, wrap));
    CHECK(operator_equal(evaluate(lhs, cfg), evaluate(rhs, cfg)));
}

TEST_CASE("cap slide across the seam at q=1") {
    for (int N = 2; N <= 3; ++N) {
        for (Mode mode : {Mode::Zeta, Mode::FormalX}) {
            EvalConfig cfg{N, mode};
            for (int k = 1; k <= 2; ++k) {
                BoundaryObject empty{N, {}};
                WebWord cup = word_gen(empty, 1, GCup{k, true});
                WebWord wl = word_gen(cup.tgt, 1, GWrap{1}, true);
                WebWord wr = word_gen(cup.tgt, 2, GWrap{-1}, true);
                CHECK(operator_equal(evaluate(word_compose(wl, cup), cfg),
                                     evaluate(word_compose(wr, cup), cfg)));
                // cap version
                BoundaryObject pair = cup.tgt;
                WebWord cap = word_gen(pair, 1, GCap{k, false});
                WebWord c1 = word_compose(cap, word_gen(pair, 1, GWrap{1}, true));
                WebWord c2 = word_compose(cap, word_gen(pair, 2, GWrap{-1}, true));
                CHECK(operator_equal(evaluate(c1, cfg), evaluate(c2, cfg)));
            }
        }
    }
}

TEST_CASE("wrap against rotation consistency") {
    // Wrap(1,1) = (crossings moving strand 1 to the end) . Rotate(1)
    for (int N = 2; N <= 3; ++N) {
        EvalConfig cfg = zcfg(N);
        for (int m = 2; m <= 3; ++m) {
            SparseOperator lhs = evaluate(wrap_expr(Mode::Zeta, N, m, 1, 1), cfg);
            SparseOperator rot = evaluate(rotate_expr(Mode::Zeta, N, m, 1), cfg);
            SparseOperator acc = rot;
            // bring the last strand back to the front: s_{m-1}, ..., s_1 applied in order
            for (int i = m - 1; i >= 1; --i)
                acc = evaluate(crossing_expr(Mode::Zeta, N, m, i), cfg) * acc;
            CHECK(operator_equal(lhs, acc));
        }
    }
}

TEST_CASE("rank and span") {
    EvalConfig cfg = zcfg(2);
    CHECK(rank(eval_id(ones(2, 2), cfg)) == 4);
    SparseOperator z = SparseOperator::zero(Mode::Zeta, ones(2, 1), ones(2, 1));
    CHECK(rank(z) == 0);
    // span of {D^j} on one strand in ZETA mode is N
    for (int N = 2; N <= 4; ++N) {
        EvalConfig c = zcfg(N);
        std::vector<SparseOperator> ops;
        for (int j = 0; j <= N; ++j)
            ops.push_back(evaluate(wrap_expr(Mode::Zeta, N, 1, 1, j), c));
        CHECK(linear_span_dim(ops) == N);
    }
    // FORMAL_X: truncated independence of {D^j}, j = -3..3
    EvalConfig cx = xcfg(2);
    std::vector<SparseOperator> ops;
    for (int j = -3; j <= 3; ++j)
        ops.push_back(evaluate(wrap_expr(Mode::FormalX, 2, 1, 1, j), cx));
    CHECK(linear_span_dim(ops) == 7);
    CHECK_THROWS(rank(ops[0]));
}

TEST_CASE("operator dump format") {
    EvalConfig cfg = zcfg(2);
    SparseOperator t2 = proj_T(2, cfg);
    std::string d = t2.dump();
    CHECK(d.find("{1}|{1}\t{1}|{1}\t1") != std::string::npos);
    // dual marker
    BoundaryObject b{2, {Strand{2, true}, Strand{1, false}}};
    CHECK(basis_index_to_string(b, {0b11, 0b10}) == "{1,2}|{2}*");
}
