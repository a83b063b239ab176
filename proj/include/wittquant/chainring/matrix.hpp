#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wittquant/chainring/scalar.hpp"

namespace wittquant::chainring {

/// One matrix row, sorted by column, nonzero canonical entries only.
/// Rows out of center and ideal computations are a few percent dense,
/// so sparse rows are the single storage used throughout.
struct SparseRow {
    std::vector<std::pair<uint32_t, uint64_t>> ent;

    bool empty() const { return ent.empty(); }
    uint32_t leading_col() const { return ent.front().first; }
    uint64_t leading_val() const { return ent.front().second; }
    uint64_t at(uint32_t col) const;

    friend bool operator==(const SparseRow&, const SparseRow&) = default;
    friend auto operator<=>(const SparseRow&, const SparseRow&) = default;
};

/// r += c*s over Z/pn (c canonical, may be 0 = no-op).
SparseRow row_axpy(const SparseRow& r, uint64_t c, const SparseRow& s, uint64_t pn);
SparseRow row_scale(const SparseRow& r, uint64_t c, uint64_t pn);

/// Matrix over Z/p^n seen as a list of row vectors; the row span is the
/// object of interest everywhere (centers, ideals, membership).
class ZpnMatrix {
public:
    ZpnMatrix() = default;
    ZpnMatrix(PModulus mod, uint32_t rows, uint32_t cols);

    static ZpnMatrix from_dense(PModulus mod, uint32_t cols,
                                const std::vector<std::vector<int64_t>>& rows);
    static ZpnMatrix identity(PModulus mod, uint32_t dim);

    const PModulus& modulus() const { return mod_; }
    uint32_t rows() const { return uint32_t(rows_.size()); }
    uint32_t cols() const { return cols_; }

    const SparseRow& row(uint32_t i) const { return rows_[i]; }
    SparseRow& row(uint32_t i) { return rows_[i]; }
    uint64_t at(uint32_t i, uint32_t j) const { return rows_[i].at(j); }
    void set(uint32_t i, uint32_t j, int64_t v);

    void append_row(SparseRow r);
    void append_rows(const ZpnMatrix& other);

    std::vector<std::vector<uint64_t>> to_dense() const;

    friend bool operator==(const ZpnMatrix&, const ZpnMatrix&) = default;

private:
    PModulus mod_{};
    uint32_t cols_ = 0;
    std::vector<SparseRow> rows_;
};

/// Unique Howell basis of the row span: row echelon with leading entries
/// p^v (unit-normalized), entries above a pivot reduced mod p^v, and the
/// span closed under the p^(n-v) completions.  Canonical: two matrices
/// have equal row spans iff their Howell forms are identical.
ZpnMatrix howell_form(const ZpnMatrix& m);

/// Howell form plus the transform rows T with H = T*M (row-for-row).
struct HowellWithTransform {
    ZpnMatrix howell;
    ZpnMatrix transform; // howell.rows() x m.rows()
};
HowellWithTransform howell_form_with_transform(const ZpnMatrix& m);

/// Howell basis of the left kernel {v : v*M = 0}.
ZpnMatrix kernel(const ZpnMatrix& m);

/// Exact span membership with a coefficient certificate on the input rows.
struct SpanMembership {
    bool member = false;
    std::vector<uint64_t> certificate; // coefficients c with c*M = v when member
};
SpanMembership in_row_span(const ZpnMatrix& m, const SparseRow& v);
SpanMembership in_row_span(const HowellWithTransform& h, const SparseRow& v);

bool span_equal(const ZpnMatrix& a, const ZpnMatrix& b);

/// Howell basis of span(a) + span(b).
ZpnMatrix span_sum(const ZpnMatrix& a, const ZpnMatrix& b);

/// Howell basis of span(a) ∩ span(b), via the kernel of the stacked rows.
ZpnMatrix span_intersect(const ZpnMatrix& a, const ZpnMatrix& b);

/// Sub-span of all span elements supported on columns >= first_col,
/// read off a Howell form: exactly the rows with pivot >= first_col.
ZpnMatrix span_suffix(const ZpnMatrix& howell, uint32_t first_col);

/// Number of elements of the row span, = prod over pivots of p^(n-v).
/// Exact but only sensible for small instances (tests).
uint64_t span_cardinality(const ZpnMatrix& howell);

/// Rows reduced mod p^m into a lower-length chain ring (ring map on spans).
ZpnMatrix reduce_rows_mod(const ZpnMatrix& m, uint32_t to_length);

} // namespace wittquant::chainring
