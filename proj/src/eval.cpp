#include "webcalc/eval.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace webcalc {

// ---------- basis ----------

std::vector<int> mask_colors(Mask m) {
    std::vector<int> r;
    for (int i = 0; i < 32; ++i)
        if (m & (1u << i)) r.push_back(i + 1);
    return r;
}

const std::vector<Mask>& subsets_of_size(int N, int k) {
    static std::map<std::pair<int, int>, std::vector<Mask>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(N, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Mask> v;
    if (k >= 0 && k <= N) {
        for (Mask m = 0; m < (1u << N); ++m)
            if (popcount(m) == k) v.push_back(m);
    }
    return cache.emplace(key, std::move(v)).first->second;
}

std::vector<BasisIndex> enumerate_basis(const BoundaryObject& b) {
    std::vector<BasisIndex> out{BasisIndex{}};
    for (auto& s : b.strands) {
        const auto& subs = subsets_of_size(b.N, s.label);
        std::vector<BasisIndex> next;
        next.reserve(out.size() * subs.size());
        for (auto& idx : out)
            for (Mask m : subs) {
                BasisIndex e = idx;
                e.push_back(m);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

long space_dimension(const BoundaryObject& b) {
    long d = 1;
    for (auto& s : b.strands) d *= (long)subsets_of_size(b.N, s.label).size();
    return d;
}

std::vector<int> basis_weight(const BoundaryObject& b, const BasisIndex& idx) {
    std::vector<int> w(b.N, 0);
    for (size_t i = 0; i < idx.size(); ++i) {
        int sgn = b.strands[i].up ? 1 : -1;
        for (int c : mask_colors(idx[i])) w[c - 1] += sgn;
    }
    return w;
}

std::string basis_index_to_string(const BoundaryObject& b, const BasisIndex& idx) {
    if (idx.empty()) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) os << "|";
        os << "{";
        auto cs = mask_colors(idx[i]);
        for (size_t j = 0; j < cs.size(); ++j) {
            if (j) os << ",";
            os << cs[j];
        }
        os << "}";
        if (!b.strands[i].up) os << "*";
    }
    return os.str();
}

int inversions(Mask S, Mask T) {
    int inv = 0;
    for (int i = 1; i < 32; ++i)
        if (S & (1u << i)) inv += popcount(T & ((1u << i) - 1));
    return inv;
}

long epsilon_weight(int N, Mask S) {
    long e = 0;
    for (int c : mask_colors(S)) e += N + 1 - 2 * c;
    return e;
}

// ---------- sparse operator ----------

SparseOperator SparseOperator::identity(Mode mode, const BoundaryObject& b) {
    SparseOperator r(mode, b, b);
    Scalar one = Scalar::one(mode, b.N);
    for (auto& idx : enumerate_basis(b)) r.rows_[idx][idx] = one;
    return r;
}

size_t SparseOperator::entry_count() const {
    size_t n = 0;
    for (auto& [t, row] : rows_) { (void)t; n += row.size(); }
    return n;
}

void SparseOperator::add_entry(const BasisIndex& t, const BasisIndex& s, const Scalar& v) {
    if (v.is_zero()) return;
    auto& cell = rows_[t][s];
    if (cell.mode() != mode_ && cell.is_zero()) cell = Scalar::zero(mode_, src_.N);
    cell = cell + v;
    if (cell.is_zero()) {
        rows_[t].erase(s);
        if (rows_[t].empty()) rows_.erase(t);
    }
}

Scalar SparseOperator::entry(const BasisIndex& t, const BasisIndex& s) const {
    auto it = rows_.find(t);
    if (it == rows_.end()) return Scalar::zero(mode_, src_.N);
    auto jt = it->second.find(s);
    if (jt == it->second.end()) return Scalar::zero(mode_, src_.N);
    return jt->second;
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
    if (!(src_ == o.src_) || !(tgt_ == o.tgt_) || mode_ != o.mode_)
        throw std::invalid_argument("operator +: boundary or mode mismatch");
    SparseOperator r = *this;
    for (auto& [t, row] : o.rows_)
        for (auto& [s, v] : row) r.add_entry(t, s, v);
    return r;
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
    return *this + o.scaled(Rational(-1));
}

SparseOperator SparseOperator::scaled(const Scalar& c) const {
    SparseOperator r(mode_, src_, tgt_);
    if (c.is_zero()) return r;
    for (auto& [t, row] : rows_)
        for (auto& [s, v] : row) {
            Scalar w = v * c;
            if (!w.is_zero()) r.rows_[t][s] = std::move(w);
        }
    return r;
}

SparseOperator SparseOperator::scaled(const Rational& c) const {
    return scaled(Scalar::make(mode_, src_.N, c));
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
    if (mode_ != o.mode_) throw std::invalid_argument("operator *: mode mismatch");
    if (!(src_ == o.tgt_))
        throw std::invalid_argument("operator *: middle boundary mismatch " + src_.to_string() +
                                    " vs " + o.tgt_.to_string());
    SparseOperator r(mode_, o.src_, tgt_);
    for (auto& [t, row] : rows_)
        for (auto& [m, a] : row) {
            auto it = o.rows_.find(m);
            if (it == o.rows_.end()) continue;
            for (auto& [s, b] : it->second) r.add_entry(t, s, a * b);
        }
    return r;
}

SparseOperator SparseOperator::kron(const SparseOperator& right) const {
    if (mode_ != right.mode_) throw std::invalid_argument("kron: mode mismatch");
    BoundaryObject src = src_, tgt = tgt_;
    src.strands.insert(src.strands.end(), right.src_.strands.begin(), right.src_.strands.end());
    tgt.strands.insert(tgt.strands.end(), right.tgt_.strands.begin(), right.tgt_.strands.end());
    SparseOperator r(mode_, src, tgt);
    for (auto& [t1, row1] : rows_)
        for (auto& [s1, a] : row1)
            for (auto& [t2, row2] : right.rows_)
                for (auto& [s2, b] : row2) {
                    BasisIndex t = t1, s = s1;
                    t.insert(t.end(), t2.begin(), t2.end());
                    s.insert(s.end(), s2.begin(), s2.end());
                    Scalar v = a * b;
                    if (!v.is_zero()) r.rows_[t][s] = std::move(v);
                }
    return r;
}

SparseOperator SparseOperator::power(long e) const {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    SparseOperator r = identity(mode_, src_);
    for (long i = 0; i < e; ++i) r = *this * r;
    return r;
}

bool SparseOperator::operator==(const SparseOperator& o) const { return operator_equal(*this, o); }

std::string SparseOperator::dump() const {
    std::ostringstream os;
    for (auto& [t, row] : rows_)
        for (auto& [s, v] : row)
            os << basis_index_to_string(tgt_, t) << "\t" << basis_index_to_string(src_, s) << "\t"
               << v.to_string() << "\n";
    return os.str();
}

bool operator_equal(const SparseOperator& a, const SparseOperator& b) {
    if (a.mode() != b.mode()) throw std::invalid_argument("operator_equal: mode mismatch");
    if (!(a.src() == b.src()) || !(a.tgt() == b.tgt()))
        throw std::invalid_argument("operator_equal: boundary mismatch");
    // maps are canonical (no zeros stored)
    if (a.rows().size() != b.rows().size()) return false;
    for (auto& [t, row] : a.rows()) {
        auto it = b.rows().find(t);
        if (it == b.rows().end() || it->second.size() != row.size()) return false;
        for (auto& [s, v] : row) {
            auto jt = it->second.find(s);
            if (jt == it->second.end() || !(jt->second == v)) return false;
        }
    }
    return true;
}

// ---------- generator matrices ----------

Scalar EvalConfig::neg_q(long e) const {
    Scalar q_e = q(e);
    return (e % 2 == 0) ? q_e : -q_e;
}

namespace {

BoundaryObject bnd(int N, std::vector<Strand> s) { return BoundaryObject{N, std::move(s)}; }

// merge of two upward (or two downward) strands; labels may be 0 or exceed N,
// in which case the operator is empty.
SparseOperator merge_matrix(int k, int l, bool dual, const EvalConfig& cfg) {
    SparseOperator r(cfg.mode, bnd(cfg.N, {{k, !dual}, {l, !dual}}), bnd(cfg.N, {{k + l, !dual}}));
    for (Mask S : subsets_of_size(cfg.N, k))
        for (Mask T : subsets_of_size(cfg.N, l)) {
            if (S & T) continue;
            long e = inversions(S, T);
            Scalar c = dual ? cfg.neg_q(-e) : cfg.neg_q(e);
            if (dual && ((long)k * l) % 2 != 0) c = -c;
            r.add_entry({S | T}, {S, T}, c);
        }
    return r;
}

SparseOperator split_matrix(int k, int l, bool dual, const EvalConfig& cfg) {
    SparseOperator r(cfg.mode, bnd(cfg.N, {{k + l, !dual}}), bnd(cfg.N, {{k, !dual}, {l, !dual}}));
    for (Mask S : subsets_of_size(cfg.N, k + l))
        for (Mask T : subsets_of_size(cfg.N, k)) {
            if ((T & S) != T) continue;
            Mask rest = S & ~T;
            long e = inversions(rest, T);
            Scalar c = dual ? cfg.neg_q(e) : cfg.neg_q(-e);
            if (!dual && ((long)k * l) % 2 != 0) c = -c;
            r.add_entry({T, rest}, {S}, c);
        }
    return r;
}

SparseOperator cup_matrix(int k, bool left, const EvalConfig& cfg) {
    BoundaryObject tgt = left ? bnd(cfg.N, {{k, true}, {k, false}}) : bnd(cfg.N, {{k, false}, {k, true}});
    SparseOperator r(cfg.mode, bnd(cfg.N, {}), tgt);
    for (Mask S : subsets_of_size(cfg.N, k)) {
        Scalar c = left ? cfg.one() : cfg.q(epsilon_weight(cfg.N, S));
        r.add_entry({S, S}, {}, c);
    }
    return r;
}

SparseOperator cap_matrix(int k, bool left, const EvalConfig& cfg) {
    BoundaryObject src = left ? bnd(cfg.N, {{k, false}, {k, true}}) : bnd(cfg.N, {{k, true}, {k, false}});
    SparseOperator r(cfg.mode, src, bnd(cfg.N, {}));
    for (Mask S : subsets_of_size(cfg.N, k)) {
        Scalar c = left ? cfg.one() : cfg.q(-epsilon_weight(cfg.N, S));
        r.add_entry({}, {S, S}, c);
    }
    return r;
}

// full split of a k-labeled strand into k parallel 1-strands
SparseOperator full_split(int k, const EvalConfig& cfg) {
    if (k == 1) return SparseOperator::identity(cfg.mode, bnd(cfg.N, {{1, true}}));
    SparseOperator tail = full_split(k - 1, cfg);
    return SparseOperator::identity(cfg.mode, bnd(cfg.N, {{1, true}})).kron(tail) *
           split_matrix(1, k - 1, false, cfg);
}

SparseOperator full_merge(int k, const EvalConfig& cfg) {
    if (k == 1) return SparseOperator::identity(cfg.mode, bnd(cfg.N, {{1, true}}));
    SparseOperator tail = full_merge(k - 1, cfg);
    return merge_matrix(1, k - 1, false, cfg) *
           SparseOperator::identity(cfg.mode, bnd(cfg.N, {{1, true}})).kron(tail);
}

Scalar quantum_factorial(int k, const EvalConfig& cfg) {
    Scalar r = cfg.one();
    for (int j = 2; j <= k; ++j) {
        if (cfg.mode == Mode::QGeneric) r = r * Scalar::from_q(quantum_int(j));
        else r = r * Scalar::make(cfg.mode, cfg.N, Rational(j));
    }
    return r;
}

SparseOperator cross_11_matrix(int sign, const EvalConfig& cfg) {
    // id - q u, with q inverted for the negative crossing
    SparseOperator u = split_matrix(1, 1, false, cfg) * merge_matrix(1, 1, false, cfg);
    return SparseOperator::identity(cfg.mode, bnd(cfg.N, {{1, true}, {1, true}})) -
           u.scaled(cfg.q(sign));
}

// Crossings of thick strands are realized by cabling into 1-labeled strands:
// X_{k,l} = (M_l (x) M_k) . (block braid of kl single crossings) . (S_k (x) S_l)
// normalized by 1/([k]! [l]!). This reproduces id - q u at (1,1) and gives
// the Reidemeister I framing factors q^{-+ k(N-1)} of the web calculus; the
// one-step ladder expansion is recovered at evaluation level.
SparseOperator cross_up_matrix(int k, int l, int sign, const EvalConfig& cfg) {
    if (k == 1 && l == 1) return cross_11_matrix(sign, cfg);
    SparseOperator in = full_split(k, cfg).kron(full_split(l, cfg));
    SparseOperator out = full_merge(l, cfg).kron(full_merge(k, cfg));
    int n = k + l;
    // block transposition: strands 1..k travel past strands k+1..k+l
    std::vector<int> perm(n);
    for (int i = 0; i < k; ++i) perm[i] = l + i;
    for (int j = 0; j < l; ++j) perm[k + j] = j;
    SparseOperator braid = SparseOperator::identity(cfg.mode, ones(cfg.N, n));
    SparseOperator x11 = cross_11_matrix(sign, cfg);
    std::vector<int> cur = perm;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                SparseOperator step = SparseOperator::identity(cfg.mode, ones(cfg.N, i))
                                          .kron(x11)
                                          .kron(SparseOperator::identity(cfg.mode, ones(cfg.N, n - i - 2)));
                braid = step * braid;
                moved = true;
            }
        }
    }
    Scalar norm = quantum_factorial(k, cfg) * quantum_factorial(l, cfg);
    SparseOperator comp = out * braid * in;
    SparseOperator r(cfg.mode, comp.src(), comp.tgt());
    for (auto& [t, row] : comp.rows())
        for (auto& [s, v] : row) r.add_entry(t, s, v.div_exact(norm));
    return r;
}

SparseOperator cross_matrix(const GCross& x, const EvalConfig& cfg);

SparseOperator id_strand(const Strand& s, const EvalConfig& cfg) {
    return SparseOperator::identity(cfg.mode, bnd(cfg.N, {s}));
}

// crossing with a downward first strand, via bending with leftward cup/cap;
// the rotated crossing keeps its over-strand, which flips the sign read off
// an upward-oriented picture
SparseOperator cross_down_up(const GCross& x, const EvalConfig& cfg) {
    int k = x.k, l = x.l;
    SparseOperator mid = cross_matrix(GCross{l, k, -x.sign, x.up2, true}, cfg);
    SparseOperator kd = id_strand({k, false}, cfg);
    SparseOperator step1 =
        SparseOperator::identity(cfg.mode, bnd(cfg.N, {{k, false}, {l, x.up2}}))
            .kron(cup_matrix(k, true, cfg));
    SparseOperator step2 = kd.kron(mid).kron(kd);
    SparseOperator step3 = cap_matrix(k, true, cfg)
                               .kron(SparseOperator::identity(
                                   cfg.mode, bnd(cfg.N, {{l, x.up2}, {k, false}})));
    return step3 * step2 * step1;
}

// crossing with a downward second strand, via bending with rightward cup/cap
SparseOperator cross_up_down(const GCross& x, const EvalConfig& cfg) {
    int k = x.k, l = x.l;
    SparseOperator mid = cross_matrix(GCross{l, k, -x.sign, true, x.up1}, cfg);
    SparseOperator ld = id_strand({l, false}, cfg);
    SparseOperator step1 = cup_matrix(l, false, cfg).kron(
        SparseOperator::identity(cfg.mode, bnd(cfg.N, {{k, x.up1}, {l, false}})));
    SparseOperator step2 = ld.kron(mid).kron(ld);
    SparseOperator step3 =
        SparseOperator::identity(cfg.mode, bnd(cfg.N, {{l, false}, {k, x.up1}}))
            .kron(cap_matrix(l, false, cfg));
    return step3 * step2 * step1;
}

SparseOperator cross_matrix(const GCross& x, const EvalConfig& cfg) {
    if (x.up1 && x.up2) return cross_up_matrix(x.k, x.l, x.sign, cfg);
    if (!x.up1) return cross_down_up(x, cfg);
    return cross_up_down(x, cfg);
}

SparseOperator wrap_matrix(const Strand& s, long power, const EvalConfig& cfg) {
    if (cfg.mode == Mode::QGeneric)
        throw std::invalid_argument("annular generator in Q_GENERIC mode");
    SparseOperator r(cfg.mode, bnd(cfg.N, {s}), bnd(cfg.N, {s}));
    long p = s.up ? power : -power;
    for (Mask S : subsets_of_size(cfg.N, s.label)) {
        Scalar c = cfg.one();
        for (int i : mask_colors(S)) c = c * cfg.gamma(i, p);
        r.add_entry({S}, {S}, c);
    }
    return r;
}

SparseOperator rotate_once(const BoundaryObject& b, int dir, const EvalConfig& cfg) {
    if (cfg.mode == Mode::QGeneric)
        throw std::invalid_argument("annular generator in Q_GENERIC mode");
    BoundaryObject tgt = b;
    size_t n = b.strands.size();
    if (n == 0) return SparseOperator::identity(cfg.mode, b);
    if (dir > 0) std::rotate(tgt.strands.begin(), tgt.strands.begin() + 1, tgt.strands.end());
    else std::rotate(tgt.strands.begin(), tgt.strands.end() - 1, tgt.strands.end());
    SparseOperator r(cfg.mode, b, tgt);
    for (auto& idx : enumerate_basis(b)) {
        BasisIndex t = idx;
        Scalar c = cfg.one();
        if (dir > 0) {
            // v (x) w -> phase(v) w (x) v
            const Strand& s = b.strands.front();
            long p = s.up ? 1 : -1;
            for (int i : mask_colors(idx.front())) c = c * cfg.gamma(i, p);
            std::rotate(t.begin(), t.begin() + 1, t.end());
        } else {
            // w (x) v -> phase(v)^{-1} v (x) w
            const Strand& s = b.strands.back();
            long p = s.up ? -1 : 1;
            for (int i : mask_colors(idx.back())) c = c * cfg.gamma(i, p);
            std::rotate(t.begin(), t.end() - 1, t.end());
        }
        r.add_entry(t, idx, c);
    }
    return r;
}

SparseOperator rotate_matrix(const BoundaryObject& b, long power, const EvalConfig& cfg) {
    SparseOperator r = SparseOperator::identity(cfg.mode, b);
    BoundaryObject cur = b;
    for (long i = 0; i < (power > 0 ? power : -power); ++i) {
        SparseOperator step = rotate_once(cur, power > 0 ? 1 : -1, cfg);
        cur = step.tgt();
        r = step * r;
    }
    return r;
}

} // namespace

SparseOperator generator_matrix(const Generator& g, const std::vector<Strand>& ins,
                                const EvalConfig& cfg) {
    if (auto* cu = std::get_if<GCup>(&g)) return cup_matrix(cu->k, cu->left, cfg);
    if (auto* ca = std::get_if<GCap>(&g)) return cap_matrix(ca->k, ca->left, cfg);
    if (auto* m = std::get_if<GMerge>(&g)) return merge_matrix(m->k, m->l, m->dual, cfg);
    if (auto* s = std::get_if<GSplit>(&g)) return split_matrix(s->k, s->l, s->dual, cfg);
    if (auto* x = std::get_if<GCross>(&g)) return cross_matrix(*x, cfg);
    if (auto* w = std::get_if<GWrap>(&g)) {
        if (ins.size() != 1) throw std::invalid_argument("wrap needs its strand");
        return wrap_matrix(ins[0], w->power, cfg);
    }
    if (auto* r = std::get_if<GRot>(&g))
        return rotate_matrix(BoundaryObject{cfg.N, ins}, r->power, cfg);
    throw std::logic_error("generator_matrix: unhandled generator");
}

SparseOperator eval_id(const BoundaryObject& b, const EvalConfig& cfg) {
    return SparseOperator::identity(cfg.mode, b);
}

namespace {

SparseOperator slice_matrix(const Slice& sl, const EvalConfig& cfg) {
    if (sl.gens.size() == 1 && std::holds_alternative<GRot>(sl.gens[0].g))
        return generator_matrix(sl.gens[0].g, sl.src.strands, cfg);
    SparseOperator acc = SparseOperator::identity(cfg.mode, bnd(cfg.N, {}));
    size_t cur = 0;
    for (auto& pg : sl.gens) {
        size_t pos = (size_t)pg.pos - 1;
        if (pos > cur) {
            BoundaryObject gap{cfg.N, std::vector<Strand>(sl.src.strands.begin() + cur,
                                                          sl.src.strands.begin() + pos)};
            acc = acc.kron(SparseOperator::identity(cfg.mode, gap));
            cur = pos;
        }
        std::vector<Strand> ins;
        if (std::holds_alternative<GWrap>(pg.g)) ins = {sl.src.strands[cur]};
        else ins = gen_inputs(pg.g);
        acc = acc.kron(generator_matrix(pg.g, ins, cfg));
        cur += ins.size();
    }
    if (cur < sl.src.strands.size()) {
        BoundaryObject gap{cfg.N, std::vector<Strand>(sl.src.strands.begin() + cur,
                                                      sl.src.strands.end())};
        acc = acc.kron(SparseOperator::identity(cfg.mode, gap));
    }
    return acc;
}

} // namespace

SparseOperator evaluate(const WebWord& w, const EvalConfig& cfg) {
    if (cfg.mode == Mode::QGeneric && w.annular) {
        for (auto& sl : w.slices)
            for (auto& pg : sl.gens)
                if (std::holds_alternative<GWrap>(pg.g) || std::holds_alternative<GRot>(pg.g))
                    throw std::invalid_argument("annular generator in Q_GENERIC mode");
    }
    SparseOperator op = SparseOperator::identity(cfg.mode, w.src);
    for (auto& sl : w.slices) op = slice_matrix(sl, cfg) * op;
    return op;
}

SparseOperator evaluate(const WebExpr& e, const EvalConfig& cfg) {
    if (e.mode() != cfg.mode) throw std::invalid_argument("evaluate: expression mode mismatch");
    SparseOperator acc = SparseOperator::zero(cfg.mode, e.src(), e.tgt());
    for (auto& t : e.terms()) acc = acc + evaluate(t.word, cfg).scaled(t.coef);
    return acc;
}

} // namespace webcalc
