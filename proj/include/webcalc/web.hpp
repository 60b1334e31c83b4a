#ifndef WEBCALC_WEB_HPP
#define WEBCALC_WEB_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>
#include "webcalc/scalar.hpp"

namespace webcalc {

struct Strand {
    int label = 1;
    bool up = true;
    bool operator==(const Strand&) const = default;
};

struct BoundaryObject {
    int N = 2;
    std::vector<Strand> strands;
    size_t size() const { return strands.size(); }
    bool operator==(const BoundaryObject& o) const {
        return N == o.N && strands == o.strands;
    }
    std::string to_string() const;
};

inline BoundaryObject ones(int N, int m) {
    BoundaryObject b{N, {}};
    b.strands.assign(m, Strand{1, true});
    return b;
}

// Elementary web generators. An identity strand is not stored; gaps in a
// slice are implicit identities.
struct GCup { int k; bool left; };                  // left: ()->(k^,kv), right: ()->(kv,k^)
struct GCap { int k; bool left; };                  // left: (kv,k^)->(), right: (k^,kv)->()
struct GMerge { int k, l; bool dual = false; };     // (k,l)->(k+l), same orientation
struct GSplit { int k, l; bool dual = false; };     // (k+l)->(k,l)
struct GCross { int k, l; int sign; bool up1 = true; bool up2 = true; };
struct GWrap { long power; };                       // single-strand full wrap
struct GRot { long power; };                        // global rotation; occupies the whole slice

using Generator = std::variant<GCup, GCap, GMerge, GSplit, GCross, GWrap, GRot>;

// Input/output strand lists of a generator. GWrap adopts the strand it sits
// on; `wrapped` supplies it.
std::vector<Strand> gen_inputs(const Generator& g, std::optional<Strand> wrapped = {});
std::vector<Strand> gen_outputs(const Generator& g, std::optional<Strand> wrapped = {});

struct PlacedGen {
    int pos = 1; // 1-based start position in the slice source
    Generator g;
};

struct Slice {
    std::vector<PlacedGen> gens; // sorted by pos; identity elsewhere
    BoundaryObject src, tgt;     // resolved boundaries
};

struct WebWord {
    BoundaryObject src, tgt;
    std::vector<Slice> slices; // composed bottom to top
    bool annular = false;
    bool operator==(const WebWord& o) const;
};

// Resolve a slice against a known source boundary; throws on mismatch.
Slice make_slice(const BoundaryObject& src, std::vector<PlacedGen> gens);

WebWord word_identity(const BoundaryObject& b, bool annular = false);
// Single-generator word (identity on all other strands).
WebWord word_gen(const BoundaryObject& src, int pos, Generator g, bool annular = false);
WebWord word_compose(const WebWord& top, const WebWord& bottom); // top after bottom
WebWord word_tensor(const WebWord& left, const WebWord& right);

long winding_grade(const WebWord& w);

struct WebTerm {
    Scalar coef;
    WebWord word;
};

// A Scalar-linear combination of web words with common boundaries.
class WebExpr {
public:
    WebExpr() = default;
    WebExpr(Mode mode, int N, BoundaryObject src, BoundaryObject tgt, bool annular)
        : mode_(mode), N_(N), src_(std::move(src)), tgt_(std::move(tgt)), annular_(annular) {}
    static WebExpr from_word(Mode mode, WebWord w, Scalar coef);
    static WebExpr from_word(Mode mode, int N, WebWord w); // coefficient 1
    static WebExpr identity(Mode mode, const BoundaryObject& b, bool annular = false);
    static WebExpr zero(Mode mode, int N, BoundaryObject src, BoundaryObject tgt, bool annular);

    Mode mode() const { return mode_; }
    int N() const { return N_; }
    const BoundaryObject& src() const { return src_; }
    const BoundaryObject& tgt() const { return tgt_; }
    bool annular() const { return annular_; }
    const std::vector<WebTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WebExpr operator+(const WebExpr& o) const;
    WebExpr operator-(const WebExpr& o) const;
    WebExpr scaled(const Scalar& c) const;
    WebExpr scaled(const Rational& c) const;

    // Collect structurally equal words and drop zero coefficients.
    WebExpr simplified() const;

    void push_term(Scalar c, WebWord w);

private:
    Mode mode_ = Mode::Zeta;
    int N_ = 2;
    BoundaryObject src_, tgt_;
    bool annular_ = false;
    std::vector<WebTerm> terms_;
};

// compose(f, g): f after g; requires target(g) = source(f). Bilinear.
WebExpr compose(const WebExpr& f, const WebExpr& g);
WebExpr tensor(const WebExpr& f, const WebExpr& g);

// DSL front end (dsl.cpp)
struct ParsedFile {
    int N;
    Mode mode;
    bool annular;
    WebExpr expr;
};
// Parse a full file: header line `N=<int> mode=<q|zeta|formalX> annular=<0|1>`
// followed by one expression (may span lines; `+` continues).
ParsedFile parse_web_file(const std::string& text);
// Parse just an expression body against known parameters.
WebExpr parse_web(const std::string& text, Mode mode, int N, bool annular);
std::string print_web(const WebExpr& e);
std::string print_word(const WebWord& w);

} // namespace webcalc

#endif
