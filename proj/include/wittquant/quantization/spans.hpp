#pragma once

#include <optional>

#include "wittquant/chainring/matrix.hpp"
#include "wittquant/quantization/algebra.hpp"

namespace wittquant::quantization {

using chainring::ZpnMatrix;

/// Coordinate frame for degree-truncated computations: the monomials of
/// total degree <= cap in graded-descending order, so restriction to a
/// smaller window is a trailing column block.
struct MonomialWindow {
    AlgebraPtr algebra;
    uint32_t degree_cap = 0;
    std::vector<ExpKey> monomials;
    std::map<ExpKey, uint32_t, GradedLexDesc> index;

    MonomialWindow(AlgebraPtr alg, uint32_t cap);

    uint32_t coords() const { return uint32_t(monomials.size()); }
    /// First column of the degree <= w trailing block.
    uint32_t first_col_of_window(uint32_t w) const;
    chainring::SparseRow to_vector(const WeylElement& e) const;
    WeylElement to_element(const chainring::SparseRow& row, uint32_t level) const;
};

/// Howell-canonical span of elements of degree <= degree_cap at a level.
struct TruncatedIdealSpan {
    AlgebraPtr algebra;
    uint32_t level = 0;
    uint32_t degree_cap = 0;
    ZpnMatrix basis; // Howell form over the MonomialWindow coordinates

    MonomialWindow window() const { return MonomialWindow(algebra, degree_cap); }
};

/// Z(A_level) within the degree window, as the kernel of the stacked
/// ad(x_i), ad(y_i) operators.  The ad operators are graded of degree -1,
/// so the kernel is computed one degree slab at a time.
TruncatedIdealSpan center_basis(const AlgebraPtr& alg, uint32_t level, uint32_t degree_cap);

/// Centralizer of the generators inside A_level / span(ideal_rows): the
/// commutators are only required to land in the ideal span.  Passing no
/// ideal reproduces center_basis through a single full-size kernel.
/// The returned span includes the ideal rows themselves.
TruncatedIdealSpan center_basis_mod(const AlgebraPtr& alg, uint32_t level, uint32_t degree_cap,
                                    const ZpnMatrix* ideal_rows);

/// Span of {monomial * g * monomial : total degree <= cap} over all
/// generators, iterated with two-sided closure passes until stable.
TruncatedIdealSpan ideal_span_basis(const std::vector<WeylElement>& generators, uint32_t level,
                                    uint32_t degree_cap);

/// Intersection with the degree-capped center, Howell-canonical.
ZpnMatrix ideal_intersect_center(const TruncatedIdealSpan& ideal);

struct CentralGenReport {
    enum class Verdict { generated, not_generated_within_cap };
    Verdict verdict = Verdict::generated;
    bool truncation_warning = false; // cap likely too small for the p^(m-1)-th powers
    uint32_t degree_cap = 0;
    uint32_t comparison_window = 0;
    std::optional<WeylElement> witness; // in the ideal, outside (Z cap I)A
    ZpnMatrix center_intersection;      // Howell basis of Z(A_m) cap I
};

/// Does I = (Z(A_m) cap I) A_m hold within the truncation?  Spans are
/// closed at degree_cap and compared at degree_cap - p to keep boundary
/// artifacts of the truncation out of the verdict.  A witness, when
/// returned, is re-verified to lie in the ideal span and outside the
/// centrally generated span.
CentralGenReport central_generation_check(const std::vector<WeylElement>& generators,
                                          uint32_t level, uint32_t degree_cap);

} // namespace wittquant::quantization
