#include "webcalc/linalg.hpp"

#include <stdexcept>

namespace webcalc {

namespace {

Cyclotomic to_cyclo(const Scalar& s) {
    switch (s.mode()) {
        case Mode::Zeta: return s.as_zeta();
        case Mode::QGeneric: {
            if (!s.as_q().is_constant())
                throw std::invalid_argument("rank: non-constant Laurent entries");
            return Cyclotomic(1, s.as_q().constant_part());
        }
        case Mode::FormalX:
            if (s.as_x().is_constant()) return Cyclotomic(1, s.as_x().constant_part());
            throw std::invalid_argument("rank: FORMAL_X is not a field");
    }
    throw std::logic_error("to_cyclo");
}

} // namespace

long rank_dense(std::vector<std::vector<Cyclotomic>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    Cyclotomic prev = Cyclotomic(m[0][0].order(), Rational(1));
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        // Bareiss step: m[i][j] <- (m[r][c]*m[i][j] - m[i][c]*m[r][j]) / prev
        Cyclotomic prev_inv = prev.inverse();
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) * prev_inv;
            m[i][c] = Cyclotomic(m[i][c].order(), Rational(0));
        }
        prev = m[r][c];
        ++r;
    }
    return (long)r;
}

long rank(const SparseOperator& op) {
    if (op.is_zero()) return 0;
    // column indexing over occupied source indices only
    std::map<BasisIndex, size_t> cols;
    for (auto& [t, row] : op.rows())
        for (auto& [s, v] : row) {
            (void)v;
            if (!cols.count(s)) cols.emplace(s, cols.size());
        }
    int order = 1;
    if (op.mode() == Mode::Zeta) order = op.src().N;
    std::vector<std::vector<Cyclotomic>> m;
    m.reserve(op.rows().size());
    for (auto& [t, row] : op.rows()) {
        (void)t;
        std::vector<Cyclotomic> r(cols.size(), Cyclotomic(order, Rational(0)));
        for (auto& [s, v] : row) r[cols.at(s)] = to_cyclo(v);
        m.push_back(std::move(r));
    }
    return rank_dense(std::move(m));
}

bool is_idempotent(const SparseOperator& op) {
    if (!(op.src() == op.tgt())) return false;
    return operator_equal(op * op, op);
}

bool is_weight_preserving(const SparseOperator& op) {
    for (auto& [t, row] : op.rows()) {
        auto wt = basis_weight(op.tgt(), t);
        for (auto& [s, v] : row) {
            (void)v;
            if (basis_weight(op.src(), s) != wt) return false;
        }
    }
    return true;
}

std::map<std::vector<int>, long> weight_block_ranks(const SparseOperator& op) {
    if (!is_weight_preserving(op))
        throw std::invalid_argument("weight_block_ranks: operator mixes weights");
    // split entries into weight blocks and rank each
    std::map<std::vector<int>, SparseOperator> blocks;
    for (auto& [t, row] : op.rows()) {
        auto wt = basis_weight(op.tgt(), t);
        auto it = blocks.find(wt);
        if (it == blocks.end())
            it = blocks.emplace(wt, SparseOperator(op.mode(), op.src(), op.tgt())).first;
        for (auto& [s, v] : row) it->second.add_entry(t, s, v);
    }
    std::map<std::vector<int>, long> r;
    for (auto& [wt, block] : blocks) r[wt] = rank(block);
    return r;
}

long linear_span_dim(const std::vector<SparseOperator>& ops) {
    if (ops.empty()) return 0;
    Mode mode = ops[0].mode();
    if (mode == Mode::FormalX) {
        // coordinates (target, source, monomial) over Q
        using Key = std::tuple<BasisIndex, BasisIndex, std::vector<int>>;
        std::vector<std::map<Key, Rational>> basis;
        long dim = 0;
        for (auto& op : ops) {
            std::map<Key, Rational> v;
            for (auto& [t, row] : op.rows())
                for (auto& [s, val] : row)
                    for (auto& [e, c] : val.as_x().terms()) v[{t, s, e}] = c;
            for (auto& b : basis) {
                auto pit = v.find(b.begin()->first);
                if (pit == v.end() || pit->second == 0) continue;
                Rational f = pit->second;
                for (auto& [k, c] : b) {
                    auto& cell = v[k];
                    cell -= f * c;
                    if (cell == 0) v.erase(k);
                }
            }
            for (auto it = v.begin(); it != v.end();) {
                if (it->second == 0) it = v.erase(it);
                else ++it;
            }
            if (!v.empty()) {
                Rational lead = v.begin()->second;
                for (auto& [k, c] : v) c /= lead;
                basis.push_back(std::move(v));
                std::sort(basis.begin(), basis.end(),
                          [](auto& a, auto& b) { return a.begin()->first < b.begin()->first; });
                ++dim;
            }
        }
        return dim;
    }
    // field case (Zeta, or constants)
    using Key = std::pair<BasisIndex, BasisIndex>;
    std::vector<std::map<Key, Cyclotomic>> basis;
    long dim = 0;
    for (auto& op : ops) {
        std::map<Key, Cyclotomic> v;
        for (auto& [t, row] : op.rows())
            for (auto& [s, val] : row) v[{t, s}] = to_cyclo(val);
        for (auto& b : basis) {
            auto pit = v.find(b.begin()->first);
            if (pit == v.end() || pit->second.is_zero()) continue;
            Cyclotomic f = pit->second;
            for (auto& [k, c] : b) {
                auto it = v.find(k);
                if (it == v.end()) v.emplace(k, -(f * c));
                else it->second = it->second - f * c;
            }
        }
        for (auto it = v.begin(); it != v.end();) {
            if (it->second.is_zero()) it = v.erase(it);
            else ++it;
        }
        if (!v.empty()) {
            Cyclotomic inv = v.begin()->second.inverse();
            for (auto& [k, c] : v) c = c * inv;
            basis.push_back(std::move(v));
            std::sort(basis.begin(), basis.end(),
                      [](auto& a, auto& b) { return a.begin()->first < b.begin()->first; });
            ++dim;
        }
    }
    return dim;
}

} // namespace webcalc
