#pragma once

#include <map>

#include "wittquant/polyring/ideal.hpp"

namespace wittquant::polyring {

/// Kaehler 1-form sum f_i dx_i; zero coefficients are dropped.
class OneForm {
public:
    OneForm() = default;
    explicit OneForm(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    const std::map<std::size_t, Polynomial>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Polynomial coefficient(std::size_t slot) const;

    void set_coefficient(std::size_t slot, Polynomial f);
    void add_to_coefficient(std::size_t slot, const Polynomial& f);

    OneForm operator+(const OneForm& o) const;
    OneForm operator-(const OneForm& o) const;
    /// g * omega, coefficientwise.
    OneForm scaled_by(const Polynomial& g) const;

    bool operator==(const OneForm& o) const;
    bool operator!=(const OneForm& o) const { return !(*this == o); }

    /// Canonical text form `(f)*d(x) + (g)*d(y)`.
    std::string str() const;

private:
    RingPtr ring_;
    std::map<std::size_t, Polynomial> coeffs_;
};

OneForm parse_one_form(RingPtr ring, const std::string& text);

/// d(f) = sum (df/dx_i) dx_i; satisfies d(fg) = f dg + g df and d(f^p) = 0
/// over F_p.
OneForm exterior_d(const Polynomial& f);

/// Closedness of sum h_j dx_j via the mixed partials dh_j/dx_k = dh_k/dx_j.
bool one_form_is_closed(const OneForm& w);

/// Inverse Cartier operator on an explicit presentation sum f_i dg_i:
///   C^{-1}(f dg) = f^p g^(p-1) dg.
/// Defined on presentations (its value as a map to Omega^1/dS does not
/// depend on them); requires characteristic p.
OneForm cartier_inverse(RingPtr ring, const std::vector<std::pair<Polynomial, Polynomial>>& pres);

/// The composite F^(n-1) d on a length-n Witt vector over a char-p ring,
/// in coordinates: sum over i of z_i^(p^(n-i) - 1) dz_i.
OneForm fd_composite(const std::vector<Polynomial>& components, uint32_t n);

/// Coordinates in Omega^1_S tensor B, the free B-module on the dx_j with
/// coefficientwise normal forms.  Form identities "in B" are read there:
/// the conclusion-bearing hypotheses quantify over lifts in S, with the
/// lift's differential reduced coefficientwise mod the monomial ideal.
struct QuotientFormSpace {
    QuotientRing quotient;
    std::vector<ExpKey> basis;                           // monomial basis of B
    std::map<ExpKey, uint32_t, GradedLexDesc> basis_index;
    uint32_t coords() const { return uint32_t(basis.size() * quotient.base->nvars()); }

    explicit QuotientFormSpace(QuotientRing q, std::optional<uint32_t> degree_cap = std::nullopt);

    /// Sparse coordinates of w with coefficients normal-formed into B.
    std::vector<std::pair<uint32_t, uint64_t>> coordinates(const OneForm& w) const;

    bool is_zero_in_b(const OneForm& w) const { return coordinates(w).empty(); }
};

} // namespace wittquant::polyring
