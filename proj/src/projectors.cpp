#include "webcalc/projectors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace webcalc {

WebExpr crossing_expr(Mode mode, int N, int m, int i) {
    if (i < 1 || i + 1 > m) throw std::invalid_argument("crossing_expr: bad index");
    return WebExpr::from_word(mode, N, word_gen(ones(N, m), i, GCross{1, 1, +1}, true));
}

WebExpr dumbbell_expr(Mode mode, int N, int m, int i) {
    WebWord w = word_identity(ones(N, m), true);
    Slice s1 = make_slice(w.src, {PlacedGen{i, GMerge{1, 1}}});
    Slice s2 = make_slice(s1.tgt, {PlacedGen{i, GSplit{1, 1}}});
    w.slices = {s1, s2};
    w.tgt = s2.tgt;
    return WebExpr::from_word(mode, N, std::move(w));
}

WebExpr wrap_expr(Mode mode, int N, int m, int i, long p) {
    return WebExpr::from_word(mode, N, word_gen(ones(N, m), i, GWrap{p}, true));
}

WebExpr rotate_expr(Mode mode, int N, int m, long p) {
    return WebExpr::from_word(mode, N, word_gen(ones(N, m), 1, GRot{p}, true));
}

WebExpr seam_crossing_expr(Mode mode, int N, int m) {
    if (m < 2) throw std::invalid_argument("seam_crossing_expr: m >= 2");
    return compose(rotate_expr(mode, N, m, -1),
                   compose(crossing_expr(mode, N, m, m - 1), rotate_expr(mode, N, m, 1)));
}

WebExpr seam_dumbbell_expr(Mode mode, int N, int m) {
    return WebExpr::identity(mode, ones(N, m), true) - seam_crossing_expr(mode, N, m);
}

WebExpr permutation_expr(Mode mode, int N, const std::vector<int>& perm) {
    int m = (int)perm.size();
    WebExpr e = WebExpr::identity(mode, ones(N, m), true);
    // bubble sort; each adjacent swap is a crossing
    std::vector<int> cur(perm);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < m; ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                e = compose(crossing_expr(mode, N, m, i + 1), e);
                moved = true;
            }
        }
    }
    return e;
}

WebExpr eigenprojector_P(int N, int k) {
    Mode mode = Mode::Zeta;
    WebExpr e = WebExpr::zero(mode, N, ones(N, 1), ones(N, 1), true);
    for (int j = 0; j < N; ++j) {
        Scalar c = Scalar::from_zeta(Cyclotomic::zeta_power(N, -(long)k * j)) *
                   Scalar::make(mode, N, Rational(1, N));
        WebWord w = j == 0 ? word_identity(ones(N, 1), true)
                           : word_gen(ones(N, 1), 1, GWrap{j}, true);
        e.push_term(c, std::move(w));
    }
    return e;
}

WebExpr extremal_T(Mode mode, int N, int m) {
    if (m < 1) throw std::invalid_argument("extremal_T: m >= 1");
    if (m == 1) return WebExpr::identity(mode, ones(N, 1), true);
    if (m == 2) {
        WebExpr e = WebExpr::zero(mode, N, ones(N, 2), ones(N, 2), true);
        for (int k = 0; k < N; ++k) {
            WebWord w;
            if (k == 0) w = word_identity(ones(N, 2), true);
            else {
                w = word_identity(ones(N, 2), true);
                Slice sl = make_slice(w.src, {PlacedGen{1, GWrap{-k}}, PlacedGen{2, GWrap{k}}});
                w.slices = {sl};
                w.tgt = sl.tgt;
            }
            e.push_term(Scalar::make(mode, N, Rational(1, N)), std::move(w));
        }
        return e;
    }
    WebExpr prev = extremal_T(mode, N, m - 1);
    WebExpr id1 = WebExpr::identity(mode, ones(N, 1), true);
    WebExpr idm2 = WebExpr::identity(mode, ones(N, m - 2), true);
    return compose(tensor(idm2, extremal_T(mode, N, 2)), tensor(prev, id1));
}

WebExpr extremal_T_alt(Mode mode, int N, int m) {
    if (m < 3) throw std::invalid_argument("extremal_T_alt: m >= 3");
    WebExpr side = tensor(extremal_T(mode, N, m - 1), WebExpr::identity(mode, ones(N, 1), true));
    return compose(side, compose(crossing_expr(mode, N, m, m - 1), side));
}

WebExpr clasp_sym(Mode mode, int N, int m) {
    if (m < 1) throw std::invalid_argument("clasp_sym: m >= 1");
    if (m == 1) return WebExpr::identity(mode, ones(N, 1));
    WebExpr prev = tensor(clasp_sym(mode, N, m - 1), WebExpr::identity(mode, ones(N, 1)));
    WebExpr mid = dumbbell_expr(mode, N, m, m - 1);
    // planar dumbbell: keep the expression planar when the mode allows it
    return prev - compose(prev, compose(mid, prev)).scaled(Rational(m - 1, m));
}

WebExpr clasp_anti(Mode mode, int N, int m) {
    if (m < 1) throw std::invalid_argument("clasp_anti: m >= 1");
    if (m == 1) return WebExpr::identity(mode, ones(N, 1));
    WebWord w = word_identity(ones(N, m), false);
    BoundaryObject cur = w.src;
    for (int j = 1; j < m; ++j) {
        Slice sl = make_slice(cur, {PlacedGen{1, GMerge{j, 1}}});
        cur = sl.tgt;
        w.slices.push_back(std::move(sl));
    }
    for (int j = m - 1; j >= 1; --j) {
        Slice sl = make_slice(cur, {PlacedGen{1, GSplit{j, 1}}});
        cur = sl.tgt;
        w.slices.push_back(std::move(sl));
    }
    w.tgt = cur;
    return WebExpr::from_word(mode, w, Scalar::make(mode, N, Rational(1, factorial_int(m))));
}

WebExpr lambda_shift(const WebExpr& e) {
    BoundaryObject b{e.N(), {Strand{e.N(), true}}};
    return tensor(e, WebExpr::identity(e.mode(), b, e.annular()));
}

WebExpr lambda_star(const WebExpr& e) {
    BoundaryObject b{e.N(), {Strand{e.N(), false}}};
    return tensor(e, WebExpr::identity(e.mode(), b, e.annular()));
}

// ---- operator-level construction ----

namespace {

struct CacheKey {
    std::string kind;
    std::vector<int> params;
    int N;
    Mode mode;
    bool operator<(const CacheKey& o) const {
        return std::tie(kind, params, N, mode) < std::tie(o.kind, o.params, o.N, o.mode);
    }
    std::string content_name() const {
        std::ostringstream os;
        os << "v1/" << kind << "/N" << N << "/" << mode_name(mode);
        for (int p : params) os << "/" << p;
        return os.str();
    }
};

// FNV-1a, used only to derive stable cache file names
std::string fnv1a_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string cache_dir() {
    const char* d = std::getenv("WEBCALC_CACHE_DIR");
    return d ? std::string(d) : std::string();
}

bool parse_index_token(const std::string& tok, BasisIndex& idx) {
    idx.clear();
    if (tok == "()") return true;
    size_t i = 0;
    while (i < tok.size()) {
        if (tok[i] != '{') return false;
        ++i;
        Mask m = 0;
        while (i < tok.size() && tok[i] != '}') {
            if (tok[i] == ',') { ++i; continue; }
            int c = 0;
            while (i < tok.size() && isdigit((unsigned char)tok[i])) c = c * 10 + (tok[i++] - '0');
            m |= 1u << (c - 1);
        }
        ++i; // '}'
        if (i < tok.size() && tok[i] == '*') ++i;
        idx.push_back(m);
        if (i < tok.size() && tok[i] == '|') ++i;
    }
    return true;
}

std::optional<SparseOperator> cache_load(const CacheKey& key, const BoundaryObject& src,
                                         const BoundaryObject& tgt) {
    std::string dir = cache_dir();
    if (dir.empty()) return {};
    std::string path = dir + "/" + fnv1a_hex(key.content_name()) + ".op";
    std::ifstream in(path);
    if (!in) return {};
    std::string header;
    if (!std::getline(in, header) || header != key.content_name()) return {};
    SparseOperator op(key.mode, src, tgt);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string t, s, val;
        if (!std::getline(ls, t, '\t') || !std::getline(ls, s, '\t') || !std::getline(ls, val))
            return {};
        BasisIndex ti, si;
        if (!parse_index_token(t, ti) || !parse_index_token(s, si)) return {};
        op.add_entry(ti, si, parse_scalar(val, key.mode, key.N));
    }
    return op;
}

void cache_store(const CacheKey& key, const SparseOperator& op) {
    std::string dir = cache_dir();
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string path = dir + "/" + fnv1a_hex(key.content_name()) + ".op";
    std::ofstream out(path);
    out << key.content_name() << "\n" << op.dump();
}

// projector contract: evaluated operators are idempotent in Zeta mode
void certify_idempotent(const CacheKey& key, const SparseOperator& op) {
    if (key.mode != Mode::Zeta) return;
    if (!operator_equal(op * op, op))
        throw std::logic_error("projector " + key.content_name() + " failed idempotency");
}

std::map<CacheKey, SparseOperator>& mem_cache() {
    static std::map<CacheKey, SparseOperator> c;
    return c;
}
std::mutex& mem_mutex() {
    static std::mutex mu;
    return mu;
}

template <typename F>
SparseOperator cached(const CacheKey& key, const BoundaryObject& src, const BoundaryObject& tgt,
                      F&& build) {
    {
        std::lock_guard<std::mutex> lock(mem_mutex());
        auto it = mem_cache().find(key);
        if (it != mem_cache().end()) return it->second;
    }
    if (auto op = cache_load(key, src, tgt)) {
        std::lock_guard<std::mutex> lock(mem_mutex());
        return mem_cache().emplace(key, std::move(*op)).first->second;
    }
    SparseOperator op = build();
    certify_idempotent(key, op);
    cache_store(key, op);
    std::lock_guard<std::mutex> lock(mem_mutex());
    return mem_cache().emplace(key, std::move(op)).first->second;
}

} // namespace

SparseOperator proj_T(int m, const EvalConfig& cfg) {
    if (m == 0) return SparseOperator::identity(cfg.mode, ones(cfg.N, 0));
    CacheKey key{"T", {m}, cfg.N, cfg.mode};
    return cached(key, ones(cfg.N, m), ones(cfg.N, m), [&] {
        // product of the m-1 commuting factors id (x) T_2 (x) id
        SparseOperator t2 = evaluate(extremal_T(cfg.mode, cfg.N, std::min(m, 2)), cfg);
        if (m == 1) return t2;
        SparseOperator acc = SparseOperator::identity(cfg.mode, ones(cfg.N, m));
        for (int j = 0; j + 2 <= m; ++j) {
            SparseOperator f = SparseOperator::identity(cfg.mode, ones(cfg.N, j))
                                   .kron(t2)
                                   .kron(SparseOperator::identity(cfg.mode, ones(cfg.N, m - 2 - j)));
            acc = f * acc;
        }
        return acc;
    });
}

SparseOperator proj_P(int k, const EvalConfig& cfg) {
    if (cfg.mode != Mode::Zeta) throw std::invalid_argument("proj_P: Zeta mode only");
    CacheKey key{"P", {k}, cfg.N, cfg.mode};
    return cached(key, ones(cfg.N, 1), ones(cfg.N, 1),
                  [&] { return evaluate(eigenprojector_P(cfg.N, k), cfg); });
}

SparseOperator proj_clasp_sym(int m, const EvalConfig& cfg) {
    CacheKey key{"Pclasp", {m}, cfg.N, cfg.mode};
    return cached(key, ones(cfg.N, m), ones(cfg.N, m), [&] {
        if (m == 1) return SparseOperator::identity(cfg.mode, ones(cfg.N, 1));
        SparseOperator prev =
            proj_clasp_sym(m - 1, cfg).kron(SparseOperator::identity(cfg.mode, ones(cfg.N, 1)));
        SparseOperator u = evaluate(dumbbell_expr(cfg.mode, cfg.N, m, m - 1), cfg);
        return prev - (prev * u * prev).scaled(Rational(m - 1, m));
    });
}

SparseOperator proj_clasp_anti(int m, const EvalConfig& cfg) {
    CacheKey key{"Vclasp", {m}, cfg.N, cfg.mode};
    return cached(key, ones(cfg.N, m), ones(cfg.N, m),
                  [&] { return evaluate(clasp_anti(cfg.mode, cfg.N, m), cfg); });
}

SparseOperator proj_orbit(int n, const EvalConfig& cfg) {
    CacheKey key{"O", {n}, cfg.N, cfg.mode};
    return cached(key, ones(cfg.N, n), ones(cfg.N, n), [&]() -> SparseOperator {
        if (n == 1) return SparseOperator::identity(cfg.mode, ones(cfg.N, 1));
        if (n == 2)
            return SparseOperator::identity(cfg.mode, ones(cfg.N, 2)) - proj_T(2, cfg);
        SparseOperator on = proj_orbit(n - 1, cfg);
        SparseOperator id1 = SparseOperator::identity(cfg.mode, ones(cfg.N, 1));
        SparseOperator left = id1.kron(on);
        SparseOperator right = on.kron(id1);
        SparseOperator s1 = evaluate(crossing_expr(cfg.mode, cfg.N, n, 1), cfg);
        return s1 * left * s1 * left * right;
    });
}

SparseOperator proj_P_tuple(const std::vector<int>& ks, const EvalConfig& cfg) {
    SparseOperator acc = SparseOperator::identity(cfg.mode, ones(cfg.N, 0));
    for (int k : ks) acc = acc.kron(proj_P(k, cfg));
    return acc;
}

SparseOperator proj_partition(const std::vector<int>& lambda, const EvalConfig& cfg) {
    std::vector<int> parts = lambda;
    std::sort(parts.rbegin(), parts.rend());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (parts.empty()) throw std::invalid_argument("proj_partition: empty partition");
    int k = (int)parts.size();
    if (k > cfg.N) throw std::invalid_argument("proj_partition: more parts than N");
    int n = 0;
    for (int p : parts) n += p;
    CacheKey key{"part", parts, cfg.N, cfg.mode};
    return cached(key, ones(cfg.N, n), ones(cfg.N, n), [&] {
        SparseOperator tprod = SparseOperator::identity(cfg.mode, ones(cfg.N, 0));
        for (int p : parts) tprod = tprod.kron(proj_T(p, cfg));
        // permutation sending the last strand of each block to the last k slots
        std::vector<int> reps;
        int acc_pos = 0;
        for (int p : parts) {
            acc_pos += p;
            reps.push_back(acc_pos - 1); // 0-based
        }
        std::vector<int> perm(n, -1);
        int out = n - k;
        for (int i = 0; i < k; ++i) perm[reps[i]] = out++;
        int slot = 0;
        for (int i = 0; i < n; ++i)
            if (perm[i] < 0) perm[i] = slot++;
        SparseOperator sigma = evaluate(permutation_expr(cfg.mode, cfg.N, perm), cfg);
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        SparseOperator sigma_inv = evaluate(permutation_expr(cfg.mode, cfg.N, inv), cfg);
        SparseOperator ok = SparseOperator::identity(cfg.mode, ones(cfg.N, n - k))
                                .kron(proj_orbit(k, cfg));
        return tprod * sigma_inv * ok * sigma * tprod;
    });
}

SparseOperator projector_by_key(const std::string& key, const EvalConfig& cfg) {
    auto colon = key.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("projector key wants ':'");
    std::string kind = key.substr(0, colon);
    std::string arg = key.substr(colon + 1);
    if (kind == "part") {
        std::vector<int> parts;
        std::istringstream is(arg);
        std::string tok;
        while (std::getline(is, tok, '+')) parts.push_back(std::stoi(tok));
        return proj_partition(parts, cfg);
    }
    int v = std::stoi(arg);
    if (kind == "T") return proj_T(v, cfg);
    if (kind == "P") return proj_P(v, cfg);
    if (kind == "Vclasp") return proj_clasp_anti(v, cfg);
    if (kind == "Pclasp") return proj_clasp_sym(v, cfg);
    if (kind == "O") return proj_orbit(v, cfg);
    throw std::invalid_argument("unknown projector kind: " + kind);
}

} // namespace webcalc
