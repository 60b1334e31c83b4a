#include "webcalc/web.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace webcalc {

std::string BoundaryObject::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < strands.size(); ++i) {
        if (i) os << ",";
        os << strands[i].label << (strands[i].up ? "^" : "v");
    }
    os << ")";
    return os.str();
}

std::vector<Strand> gen_inputs(const Generator& g, std::optional<Strand> wrapped) {
    if (auto* c = std::get_if<GCup>(&g)) { (void)c; return {}; }
    if (auto* c = std::get_if<GCap>(&g)) {
        if (c->left) return {Strand{c->k, false}, Strand{c->k, true}};
        return {Strand{c->k, true}, Strand{c->k, false}};
    }
    if (auto* m = std::get_if<GMerge>(&g)) {
        bool up = !m->dual;
        return {Strand{m->k, up}, Strand{m->l, up}};
    }
    if (auto* s = std::get_if<GSplit>(&g)) {
        bool up = !s->dual;
        return {Strand{s->k + s->l, up}};
    }
    if (auto* x = std::get_if<GCross>(&g)) {
        return {Strand{x->k, x->up1}, Strand{x->l, x->up2}};
    }
    if (std::get_if<GWrap>(&g)) {
        if (!wrapped) throw std::logic_error("gen_inputs: wrap needs strand context");
        return {*wrapped};
    }
    throw std::logic_error("gen_inputs: rotation has no local signature");
}

std::vector<Strand> gen_outputs(const Generator& g, std::optional<Strand> wrapped) {
    if (auto* c = std::get_if<GCup>(&g)) {
        if (c->left) return {Strand{c->k, true}, Strand{c->k, false}};
        return {Strand{c->k, false}, Strand{c->k, true}};
    }
    if (std::get_if<GCap>(&g)) return {};
    if (auto* m = std::get_if<GMerge>(&g)) {
        bool up = !m->dual;
        return {Strand{m->k + m->l, up}};
    }
    if (auto* s = std::get_if<GSplit>(&g)) {
        bool up = !s->dual;
        return {Strand{s->k, up}, Strand{s->l, up}};
    }
    if (auto* x = std::get_if<GCross>(&g)) {
        return {Strand{x->l, x->up2}, Strand{x->k, x->up1}};
    }
    if (std::get_if<GWrap>(&g)) {
        if (!wrapped) throw std::logic_error("gen_outputs: wrap needs strand context");
        return {*wrapped};
    }
    throw std::logic_error("gen_outputs: rotation has no local signature");
}

Slice make_slice(const BoundaryObject& src, std::vector<PlacedGen> gens) {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const PlacedGen& a, const PlacedGen& b) { return a.pos < b.pos; });
    Slice sl;
    sl.src = src;
    sl.tgt.N = src.N;

    // global rotation occupies the whole slice
    if (gens.size() == 1 && std::holds_alternative<GRot>(gens[0].g)) {
        long p = std::get<GRot>(gens[0].g).power;
        sl.tgt.strands = src.strands;
        long n = (long)src.strands.size();
        if (n > 0) {
            long shift = ((p % n) + n) % n; // rotate left by p (first strand to the back)
            std::rotate(sl.tgt.strands.begin(), sl.tgt.strands.begin() + shift,
                        sl.tgt.strands.end());
        }
        sl.gens = std::move(gens);
        return sl;
    }

    size_t cur = 0; // 0-based index into src.strands
    for (auto& pg : gens) {
        if (std::holds_alternative<GRot>(pg.g))
            throw std::invalid_argument("rot(p) must be alone in its slice");
        size_t pos = (size_t)pg.pos - 1;
        if (pos < cur) throw std::invalid_argument("slice: overlapping generators");
        while (cur < pos) {
            if (cur >= src.strands.size())
                throw std::invalid_argument("slice: generator position beyond boundary");
            sl.tgt.strands.push_back(src.strands[cur++]);
        }
        std::optional<Strand> wrapped;
        if (std::holds_alternative<GWrap>(pg.g)) {
            if (cur >= src.strands.size())
                throw std::invalid_argument("slice: wrap beyond boundary");
            wrapped = src.strands[cur];
        }
        auto ins = gen_inputs(pg.g, wrapped);
        for (auto& need : ins) {
            if (cur >= src.strands.size())
                throw std::invalid_argument("slice: generator inputs beyond boundary");
            if (!(src.strands[cur] == need))
                throw std::invalid_argument("slice: strand type mismatch at position " +
                                            std::to_string(cur + 1) + " in " + src.to_string());
            ++cur;
        }
        for (auto& out : gen_outputs(pg.g, wrapped)) sl.tgt.strands.push_back(out);
    }
    while (cur < src.strands.size()) sl.tgt.strands.push_back(src.strands[cur++]);
    sl.gens = std::move(gens);
    return sl;
}

bool WebWord::operator==(const WebWord& o) const {
    if (!(src == o.src) || !(tgt == o.tgt) || annular != o.annular) return false;
    return print_word(*this) == print_word(o);
}

WebWord word_identity(const BoundaryObject& b, bool annular) {
    WebWord w;
    w.src = w.tgt = b;
    w.annular = annular;
    return w;
}

WebWord word_gen(const BoundaryObject& src, int pos, Generator g, bool annular) {
    WebWord w;
    w.src = src;
    w.annular = annular || std::holds_alternative<GWrap>(g) || std::holds_alternative<GRot>(g);
    w.slices.push_back(make_slice(src, {PlacedGen{pos, std::move(g)}}));
    w.tgt = w.slices.back().tgt;
    return w;
}

WebWord word_compose(const WebWord& top, const WebWord& bottom) {
    if (!(top.src == bottom.tgt))
        throw std::invalid_argument("compose: boundary mismatch " + top.src.to_string() +
                                    " vs " + bottom.tgt.to_string());
    WebWord w;
    w.src = bottom.src;
    w.tgt = top.tgt;
    w.annular = top.annular || bottom.annular;
    w.slices = bottom.slices;
    w.slices.insert(w.slices.end(), top.slices.begin(), top.slices.end());
    return w;
}

WebWord word_tensor(const WebWord& left, const WebWord& right) {
    auto has_rot = [](const WebWord& w) {
        for (auto& sl : w.slices)
            for (auto& pg : sl.gens)
                if (std::holds_alternative<GRot>(pg.g)) return true;
        return false;
    };
    auto is_empty_word = [](const WebWord& w) {
        if (!w.src.strands.empty() || !w.tgt.strands.empty()) return false;
        for (auto& sl : w.slices)
            if (!sl.gens.empty()) return false;
        return true;
    };
    if ((has_rot(left) && !is_empty_word(right)) || (has_rot(right) && !is_empty_word(left)))
        throw std::invalid_argument("tensor: rot(p) not allowed in a tensor factor");

    WebWord w;
    w.annular = left.annular || right.annular;
    w.src.N = left.src.N;
    w.src.strands = left.src.strands;
    w.src.strands.insert(w.src.strands.end(), right.src.strands.begin(), right.src.strands.end());

    size_t h = std::max(left.slices.size(), right.slices.size());
    BoundaryObject lb = left.src, rb = right.src;
    for (size_t i = 0; i < h; ++i) {
        std::vector<PlacedGen> gens;
        BoundaryObject cur;
        cur.N = lb.N;
        cur.strands = lb.strands;
        cur.strands.insert(cur.strands.end(), rb.strands.begin(), rb.strands.end());
        int shift = (int)lb.strands.size();
        if (i < left.slices.size()) {
            for (auto& pg : left.slices[i].gens) gens.push_back(pg);
            lb = left.slices[i].tgt;
        }
        if (i < right.slices.size()) {
            for (auto& pg : right.slices[i].gens)
                gens.push_back(PlacedGen{pg.pos + shift, pg.g});
            rb = right.slices[i].tgt;
        }
        w.slices.push_back(make_slice(cur, std::move(gens)));
    }
    w.tgt = w.slices.empty() ? w.src : w.slices.back().tgt;
    return w;
}

long winding_grade(const WebWord& w) {
    long g = 0;
    for (auto& sl : w.slices) {
        size_t cur = 0;
        for (auto& pg : sl.gens) {
            if (auto* r = std::get_if<GRot>(&pg.g)) {
                if (!sl.src.strands.empty()) {
                    const Strand& s = sl.src.strands.front();
                    g += r->power * (long)s.label * (s.up ? 1 : -1);
                }
                continue;
            }
            size_t pos = (size_t)pg.pos - 1;
            cur = pos;
            if (auto* wr = std::get_if<GWrap>(&pg.g)) {
                const Strand& s = sl.src.strands[pos];
                g += wr->power * (long)s.label * (s.up ? 1 : -1);
            }
            (void)cur;
        }
    }
    return g;
}

WebExpr WebExpr::from_word(Mode mode, WebWord w, Scalar coef) {
    WebExpr e(mode, w.src.N, w.src, w.tgt, w.annular);
    if (!coef.is_zero()) e.terms_.push_back(WebTerm{std::move(coef), std::move(w)});
    return e;
}

WebExpr WebExpr::from_word(Mode mode, int N, WebWord w) {
    return from_word(mode, std::move(w), Scalar::one(mode, N));
}

WebExpr WebExpr::identity(Mode mode, const BoundaryObject& b, bool annular) {
    return from_word(mode, b.N, word_identity(b, annular));
}

WebExpr WebExpr::zero(Mode mode, int N, BoundaryObject src, BoundaryObject tgt, bool annular) {
    return WebExpr(mode, N, std::move(src), std::move(tgt), annular);
}

void WebExpr::push_term(Scalar c, WebWord w) {
    if (terms_.empty() && src_.strands.empty() && tgt_.strands.empty() && src_.N != w.src.N) {
        src_ = w.src;
        tgt_ = w.tgt;
        N_ = w.src.N;
    }
    if (!(w.src == src_) || !(w.tgt == tgt_))
        throw std::invalid_argument("expr: summand boundary mismatch");
    if (!c.is_zero()) terms_.push_back(WebTerm{std::move(c), std::move(w)});
}

WebExpr WebExpr::operator+(const WebExpr& o) const {
    if (mode_ != o.mode_ || !(src_ == o.src_) || !(tgt_ == o.tgt_) || annular_ != o.annular_)
        throw std::invalid_argument("expr +: mismatched expressions");
    WebExpr r = *this;
    for (auto& t : o.terms_) r.terms_.push_back(t);
    return r;
}

WebExpr WebExpr::operator-(const WebExpr& o) const {
    return *this + o.scaled(Rational(-1));
}

WebExpr WebExpr::scaled(const Scalar& c) const {
    WebExpr r(mode_, N_, src_, tgt_, annular_);
    if (c.is_zero()) return r;
    for (auto& t : terms_) r.terms_.push_back(WebTerm{t.coef * c, t.word});
    return r;
}

WebExpr WebExpr::scaled(const Rational& c) const { return scaled(Scalar::make(mode_, N_, c)); }

WebExpr WebExpr::simplified() const {
    WebExpr r(mode_, N_, src_, tgt_, annular_);
    std::vector<std::pair<std::string, size_t>> seen;
    for (auto& t : terms_) {
        std::string key = print_word(t.word);
        auto it = std::find_if(seen.begin(), seen.end(),
                               [&](auto& p) { return p.first == key; });
        if (it == seen.end()) {
            seen.emplace_back(key, r.terms_.size());
            r.terms_.push_back(t);
        } else {
            r.terms_[it->second].coef = r.terms_[it->second].coef + t.coef;
        }
    }
    std::vector<WebTerm> kept;
    for (auto& t : r.terms_)
        if (!t.coef.is_zero()) kept.push_back(std::move(t));
    r.terms_ = std::move(kept);
    std::sort(r.terms_.begin(), r.terms_.end(), [](const WebTerm& a, const WebTerm& b) {
        return print_word(a.word) < print_word(b.word);
    });
    return r;
}

WebExpr compose(const WebExpr& f, const WebExpr& g) {
    if (f.mode() != g.mode()) throw std::invalid_argument("compose: mode mismatch");
    if (!(g.tgt() == f.src()))
        throw std::invalid_argument("compose: target(g) != source(f): " + g.tgt().to_string() +
                                    " vs " + f.src().to_string());
    WebExpr r(f.mode(), f.N(), g.src(), f.tgt(), f.annular() || g.annular());
    for (auto& tf : f.terms())
        for (auto& tg : g.terms())
            r.push_term(tf.coef * tg.coef, word_compose(tf.word, tg.word));
    return r;
}

WebExpr tensor(const WebExpr& f, const WebExpr& g) {
    if (f.mode() != g.mode()) throw std::invalid_argument("tensor: mode mismatch");
    BoundaryObject src, tgt;
    src.N = f.N();
    tgt.N = f.N();
    src.strands = f.src().strands;
    src.strands.insert(src.strands.end(), g.src().strands.begin(), g.src().strands.end());
    tgt.strands = f.tgt().strands;
    tgt.strands.insert(tgt.strands.end(), g.tgt().strands.begin(), g.tgt().strands.end());
    WebExpr r(f.mode(), f.N(), src, tgt, f.annular() || g.annular());
    for (auto& tf : f.terms())
        for (auto& tg : g.terms())
            r.push_term(tf.coef * tg.coef, word_tensor(tf.word, tg.word));
    return r;
}

} // namespace webcalc
