#ifndef WEBCALC_SPARSE_OP_HPP
#define WEBCALC_SPARSE_OP_HPP

#include <map>
#include <string>
#include "webcalc/basis.hpp"

namespace webcalc {

// An exact sparse matrix between the basis-indexed spaces of two boundary
// objects. Entries are kept in target-major order and never store zeros.
class SparseOperator {
public:
    using Row = std::map<BasisIndex, Scalar>;

    SparseOperator() = default;
    SparseOperator(Mode mode, BoundaryObject src, BoundaryObject tgt)
        : mode_(mode), src_(std::move(src)), tgt_(std::move(tgt)) {}

    static SparseOperator identity(Mode mode, const BoundaryObject& b);
    static SparseOperator zero(Mode mode, const BoundaryObject& src, const BoundaryObject& tgt) {
        return SparseOperator(mode, src, tgt);
    }

    Mode mode() const { return mode_; }
    const BoundaryObject& src() const { return src_; }
    const BoundaryObject& tgt() const { return tgt_; }
    const std::map<BasisIndex, Row>& rows() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }
    size_t entry_count() const;

    void add_entry(const BasisIndex& t, const BasisIndex& s, const Scalar& v);
    Scalar entry(const BasisIndex& t, const BasisIndex& s) const;

    SparseOperator operator+(const SparseOperator& o) const;
    SparseOperator operator-(const SparseOperator& o) const;
    SparseOperator scaled(const Scalar& c) const;
    SparseOperator scaled(const Rational& c) const;
    // this after o
    SparseOperator operator*(const SparseOperator& o) const;
    SparseOperator kron(const SparseOperator& right) const;
    SparseOperator power(long e) const; // square boundary; e >= 0

    bool operator==(const SparseOperator& o) const;

    // One line per entry: `target <tab> source <tab> scalar`, deterministic order.
    std::string dump() const;

private:
    Mode mode_ = Mode::Zeta;
    BoundaryObject src_, tgt_;
    std::map<BasisIndex, Row> rows_; // rows_[target][source]
};

bool operator_equal(const SparseOperator& a, const SparseOperator& b);

} // namespace webcalc

#endif
