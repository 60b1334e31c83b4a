#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "webcalc/web.hpp"

namespace webcalc {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eof() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip(); return s[i++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        size_t line = 1, col = 1;
        for (size_t j = 0; j < i && j < s.size(); ++j) {
            if (s[j] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw std::runtime_error("parse error at line " + std::to_string(line) + ", col " +
                                 std::to_string(col) + ": " + msg);
    }
    long integer() {
        skip();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) { i = start; fail("integer expected"); }
        long v = 0;
        bool neg = s[start] == '-';
        size_t j = std::isdigit((unsigned char)s[start]) ? start : start + 1;
        for (; j < s.size() && std::isdigit((unsigned char)s[j]); ++j) v = v * 10 + (s[j] - '0');
        i = j;
        return neg ? -v : v;
    }
    bool accept(char c) { if (peek() == c) { ++i; return true; } return false; }
    void expect(char c) { if (!accept(c)) fail(std::string("expected '") + c + "'"); }
    std::string ident() {
        skip();
        size_t start = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]))) ++i;
        return s.substr(start, i - start);
    }
};

struct Cell {
    std::optional<Strand> s;
};
using CellP = std::shared_ptr<Cell>;

void unify(Cursor& c, const CellP& cell, const Strand& need) {
    if (!cell->s) cell->s = need;
    else if (!(*cell->s == need)) c.fail("strand type mismatch");
}

struct TokenGen {
    int pos = 0; // 0 = sequential
    Generator g;
    std::optional<Strand> id_strand; // set for id(..) tokens instead of g
    bool is_id = false;
};

// One generator token. Returns false at slice/word end.
bool parse_token(Cursor& c, TokenGen& out) {
    c.skip();
    char ch = c.peek();
    if (ch == ';' || ch == ']' || ch == '\0') return false;
    std::string name = c.ident();
    if (name.empty()) c.fail("generator expected");
    auto args_open = [&]() { c.expect('('); };
    if (name == "id") {
        args_open();
        long k = c.integer();
        char o = c.get();
        if (o != '^' && o != 'v') c.fail("orientation '^' or 'v' expected");
        c.expect(')');
        out.is_id = true;
        out.id_strand = Strand{(int)k, o == '^'};
        return true;
    }
    if (name == "rot") {
        args_open();
        long p = c.integer();
        c.expect(')');
        out.g = GRot{p};
        return true;
    }
    if (name == "cupL" || name == "cupR" || name == "capL" || name == "capR") {
        args_open();
        long k = c.integer();
        c.expect(')');
        bool left = name[3] == 'L';
        if (name[0] == 'c' && name[1] == 'u') out.g = GCup{(int)k, left};
        else out.g = GCap{(int)k, left};
        return true;
    }
    // @-forms
    int pos = 0;
    if (c.accept('@')) pos = (int)c.integer();
    if (name == "merge" || name == "split" || name == "dmerge" || name == "dsplit") {
        args_open();
        long k = c.integer();
        c.expect(',');
        long l = c.integer();
        c.expect(')');
        bool dual = name[0] == 'd';
        if (name == "merge" || name == "dmerge") out.g = GMerge{(int)k, (int)l, dual};
        else out.g = GSplit{(int)k, (int)l, dual};
        out.pos = pos;
        return true;
    }
    if (name == "x") {
        args_open();
        long k = c.integer();
        c.expect(',');
        long l = c.integer();
        c.expect(',');
        char sgn = c.get();
        if (sgn != '+' && sgn != '-') c.fail("crossing sign expected");
        bool up1 = true, up2 = true;
        if (c.accept(',')) {
            char o1 = c.get(), o2 = c.get();
            up1 = o1 == '^';
            up2 = o2 == '^';
        }
        c.expect(')');
        out.g = GCross{(int)k, (int)l, sgn == '+' ? +1 : -1, up1, up2};
        out.pos = pos;
        return true;
    }
    if (name == "wrap") {
        args_open();
        long p = c.integer();
        c.expect(')');
        out.g = GWrap{p};
        out.pos = pos;
        return true;
    }
    c.fail("unknown generator '" + name + "'");
}

struct SliceSketch {
    std::vector<std::pair<int, Generator>> gens; // resolved 1-based positions
    bool rot = false;
};

WebWord parse_word_body(Cursor& c, bool annular, int N) {
    std::vector<CellP> src;        // source cells (grows by padding on the right)
    std::vector<CellP> bound = src; // current boundary cells
    std::vector<SliceSketch> sketches;

    auto pad_to = [&](size_t width) {
        while (bound.size() < width) {
            auto cell = std::make_shared<Cell>();
            bound.push_back(cell);
            src.push_back(cell);
        }
    };

    bool first_slice = true;
    while (true) {
        if (!first_slice) c.expect(';');
        first_slice = false;
        SliceSketch sk;
        // collect tokens of this slice
        std::vector<TokenGen> toks;
        TokenGen t;
        while (parse_token(c, t)) {
            toks.push_back(t);
            t = TokenGen{};
        }
        // resolve positions; sequential tokens start after the previous footprint
        int cursor = 1;
        std::vector<std::pair<int, Generator>> placed;
        std::vector<std::pair<int, Strand>> ids;
        for (auto& tok : toks) {
            if (tok.is_id) {
                ids.emplace_back(cursor, *tok.id_strand);
                pad_to((size_t)cursor);
                unify(c, bound[cursor - 1], *tok.id_strand);
                cursor += 1;
                continue;
            }
            if (std::holds_alternative<GRot>(tok.g)) {
                if (toks.size() != 1) c.fail("rot(p) must be alone in its slice");
                sk.rot = true;
                placed.emplace_back(1, tok.g);
                break;
            }
            int pos = tok.pos > 0 ? tok.pos : cursor;
            size_t in_count;
            if (std::holds_alternative<GWrap>(tok.g)) {
                in_count = 1;
                pad_to((size_t)pos);
            } else if (std::holds_alternative<GCup>(tok.g)) {
                in_count = 0;
                pad_to((size_t)pos - 1);
            } else {
                auto ins = gen_inputs(tok.g);
                in_count = ins.size();
                pad_to((size_t)pos + in_count - 1);
                for (size_t j = 0; j < in_count; ++j) unify(c, bound[pos - 1 + j], ins[j]);
            }
            placed.emplace_back(pos, tok.g);
            cursor = pos + (int)in_count;
        }
        // apply the slice to the cell boundary
        std::stable_sort(placed.begin(), placed.end(),
                         [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<CellP> next;
        if (sk.rot) {
            long p = std::get<GRot>(placed[0].second).power;
            next = bound;
            if (!next.empty()) {
                long n = (long)next.size();
                long shift = ((p % n) + n) % n;
                std::rotate(next.begin(), next.begin() + shift, next.end());
            }
        } else {
            size_t cur = 0;
            for (auto& [pos, g] : placed) {
                while (cur < (size_t)pos - 1) {
                    if (cur >= bound.size()) c.fail("position beyond boundary");
                    next.push_back(bound[cur++]);
                }
                if (std::holds_alternative<GWrap>(g)) {
                    if (cur >= bound.size()) c.fail("wrap beyond boundary");
                    next.push_back(bound[cur++]); // wrap passes its strand through
                    continue;
                }
                if (std::holds_alternative<GCup>(g)) {
                    for (auto& o : gen_outputs(g)) {
                        auto cell = std::make_shared<Cell>();
                        cell->s = o;
                        next.push_back(cell);
                    }
                    continue;
                }
                size_t arity = gen_inputs(g).size();
                cur += arity;
                for (auto& o : gen_outputs(g)) {
                    auto cell = std::make_shared<Cell>();
                    cell->s = o;
                    next.push_back(cell);
                }
            }
            while (cur < bound.size()) next.push_back(bound[cur++]);
        }
        sk.gens = std::move(placed);
        sketches.push_back(std::move(sk));
        bound = std::move(next);
        if (c.peek() != ';') break;
    }

    // default untyped strands to 1-labeled upward
    for (auto& cell : src)
        if (!cell->s) cell->s = Strand{1, true};

    BoundaryObject b;
    b.N = N;
    for (auto& cell : src) b.strands.push_back(*cell->s);

    WebWord w = word_identity(b, annular);
    for (size_t si = 0; si < sketches.size(); ++si) {
        std::vector<PlacedGen> pgs;
        for (auto& [pos, g] : sketches[si].gens) pgs.push_back(PlacedGen{pos, g});
        try {
            Slice sl = make_slice(w.tgt, std::move(pgs));
            w.tgt = sl.tgt;
            w.slices.push_back(std::move(sl));
        } catch (const std::exception& e) {
            c.fail("slice " + std::to_string(si + 1) + ": " + e.what());
        }
    }
    if (!annular) {
        for (auto& sl : w.slices)
            for (auto& pg : sl.gens)
                if (std::holds_alternative<GWrap>(pg.g) || std::holds_alternative<GRot>(pg.g))
                    c.fail("annular generator in a planar file");
    }
    return w;
}

} // namespace

WebExpr parse_web(const std::string& text, Mode mode, int N, bool annular) {
    Cursor c{text};
    WebExpr e;
    bool have = false;
    bool neg = c.accept('-');
    while (true) {
        // optional coefficient up to '*['
        c.skip();
        Scalar coef = Scalar::one(mode, N);
        if (c.peek() != '[') {
            size_t start = c.i;
            int depth = 0;
            size_t star = std::string::npos;
            for (size_t j = start; j < text.size(); ++j) {
                if (text[j] == '(') ++depth;
                else if (text[j] == ')') --depth;
                else if (text[j] == '*' && depth == 0) {
                    size_t k = j + 1;
                    while (k < text.size() && std::isspace((unsigned char)text[k])) ++k;
                    if (k < text.size() && text[k] == '[') { star = j; break; }
                }
            }
            if (star == std::string::npos) c.fail("expected coefficient '*[word]'");
            std::string ctext = text.substr(start, star - start);
            // strip one pair of outer parens if balanced
            auto trim = [](std::string s) {
                size_t a = s.find_first_not_of(" \t\n");
                size_t b = s.find_last_not_of(" \t\n");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            ctext = trim(ctext);
            if (!ctext.empty() && ctext.front() == '(' && ctext.back() == ')') {
                int d = 0;
                bool outer = true;
                for (size_t j = 0; j < ctext.size(); ++j) {
                    if (ctext[j] == '(') ++d;
                    if (ctext[j] == ')') { --d; if (d == 0 && j + 1 != ctext.size()) outer = false; }
                }
                if (outer) ctext = trim(ctext.substr(1, ctext.size() - 2));
            }
            try {
                coef = parse_scalar(ctext, mode, N);
            } catch (const std::exception& ex) {
                c.fail(ex.what());
            }
            c.i = star + 1;
        }
        c.expect('[');
        WebWord w;
        // empty word?
        if (c.peek() == ']') {
            c.get();
            w = word_identity(BoundaryObject{N, {}}, annular);
        } else {
            w = parse_word_body(c, annular, N);
            c.expect(']');
        }
        if (neg) coef = -coef;
        if (!have) {
            e = WebExpr(mode, N, w.src, w.tgt, annular);
            have = true;
        }
        try {
            e.push_term(std::move(coef), std::move(w));
        } catch (const std::exception& ex) {
            c.fail(ex.what());
        }
        if (c.eof()) break;
        char op = c.get();
        if (op == '+') neg = false;
        else if (op == '-') neg = true;
        else c.fail("expected '+' or '-' between summands");
    }
    return e;
}

ParsedFile parse_web_file(const std::string& text) {
    std::istringstream is(text);
    std::string line, body;
    int N = -1;
    Mode mode = Mode::Zeta;
    bool annular = false;
    bool header_done = false;
    while (std::getline(is, line)) {
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!header_done) {
            std::istringstream hs(stripped);
            std::string kv;
            while (hs >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw std::runtime_error("bad header token: " + kv);
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "N") N = std::stoi(val);
                else if (key == "mode") mode = mode_from_name(val);
                else if (key == "annular") annular = val == "1" || val == "true";
                else throw std::runtime_error("unknown header key: " + key);
            }
            if (N < 1) throw std::runtime_error("header must set N");
            header_done = true;
            continue;
        }
        body += stripped + "\n";
    }
    if (!header_done) throw std::runtime_error("missing header line");
    ParsedFile pf{N, mode, annular, parse_web(body, mode, N, annular)};
    return pf;
}

namespace {

std::string gen_token(const PlacedGen& pg) {
    std::ostringstream os;
    if (auto* cu = std::get_if<GCup>(&pg.g)) os << (cu->left ? "cupL(" : "cupR(") << cu->k << ")";
    else if (auto* ca = std::get_if<GCap>(&pg.g)) os << (ca->left ? "capL(" : "capR(") << ca->k << ")";
    else if (auto* m = std::get_if<GMerge>(&pg.g))
        os << (m->dual ? "dmerge@" : "merge@") << pg.pos << "(" << m->k << "," << m->l << ")";
    else if (auto* s = std::get_if<GSplit>(&pg.g))
        os << (s->dual ? "dsplit@" : "split@") << pg.pos << "(" << s->k << "," << s->l << ")";
    else if (auto* x = std::get_if<GCross>(&pg.g)) {
        os << "x@" << pg.pos << "(" << x->k << "," << x->l << "," << (x->sign > 0 ? '+' : '-');
        if (!x->up1 || !x->up2) os << "," << (x->up1 ? '^' : 'v') << (x->up2 ? '^' : 'v');
        os << ")";
    } else if (auto* wr = std::get_if<GWrap>(&pg.g))
        os << "wrap@" << pg.pos << "(" << wr->power << ")";
    else if (auto* r = std::get_if<GRot>(&pg.g))
        os << "rot(" << r->power << ")";
    return os.str();
}

std::string id_token(const Strand& s) {
    std::ostringstream os;
    os << "id(" << s.label << (s.up ? '^' : 'v') << ")";
    return os.str();
}

std::string print_slice(const Slice& sl) {
    std::ostringstream os;
    size_t cur = 0;
    bool first = true;
    auto emit = [&](const std::string& t) {
        if (!first) os << " ";
        os << t;
        first = false;
    };
    for (auto& pg : sl.gens) {
        if (std::holds_alternative<GRot>(pg.g)) return gen_token(pg);
        size_t pos = (size_t)pg.pos - 1;
        while (cur < pos) emit(id_token(sl.src.strands[cur++]));
        std::optional<Strand> wrapped;
        if (std::holds_alternative<GWrap>(pg.g)) wrapped = sl.src.strands[cur];
        cur += gen_inputs(pg.g, wrapped).size();
        emit(gen_token(pg));
    }
    while (cur < sl.src.strands.size()) emit(id_token(sl.src.strands[cur++]));
    return os.str();
}

} // namespace

std::string print_word(const WebWord& w) {
    std::ostringstream os;
    os << "[";
    if (w.slices.empty()) {
        bool first = true;
        for (auto& s : w.src.strands) {
            if (!first) os << " ";
            os << id_token(s);
            first = false;
        }
    } else {
        for (size_t i = 0; i < w.slices.size(); ++i) {
            if (i) os << " ; ";
            os << print_slice(w.slices[i]);
        }
    }
    os << "]";
    return os.str();
}

std::string print_web(const WebExpr& e) {
    if (e.is_zero()) return "0*" + print_word(word_identity(e.src(), e.annular()));
    std::ostringstream os;
    for (size_t i = 0; i < e.terms().size(); ++i) {
        if (i) os << " + ";
        os << "(" << e.terms()[i].coef.to_string() << ")*" << print_word(e.terms()[i].word);
    }
    return os.str();
}

} // namespace webcalc
