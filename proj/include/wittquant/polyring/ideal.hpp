#pragma once

#include "wittquant/polyring/ring.hpp"

namespace wittquant::polyring {

/// Monomial ideal given by its inclusion-minimal monomial generators.
/// Restricting to monomial ideals keeps normal forms and the subspace
/// tests Groebner-free; all quotient instances in the scenarios are of
/// this shape.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(RingPtr ring, std::vector<ExpKey> generators);
    static MonomialIdeal from_strings(RingPtr ring, const std::vector<std::string>& monomials);

    const RingPtr& ring() const { return ring_; }
    const std::vector<ExpKey>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// Membership of a monomial = divisibility by some generator.
    bool contains_monomial(const ExpKey& k) const;

    /// Normal form in ring/ideal: drop every term divisible by a
    /// generator.  Idempotent and linear.
    Polynomial normal_form(const Polynomial& f) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    RingPtr ring_;
    std::vector<ExpKey> gens_; // sorted, inclusion-minimal
};

/// Minimal monomial generators of m^e, e >= 1.
MonomialIdeal ideal_power_generators(const MonomialIdeal& m, uint32_t e);

/// B = ring/modulus_ideal with the normal-form representatives.
struct QuotientRing {
    RingPtr base;
    MonomialIdeal modulus_ideal;

    QuotientRing(RingPtr b, MonomialIdeal i) : base(std::move(b)), modulus_ideal(std::move(i)) {}

    Polynomial nf(const Polynomial& f) const { return modulus_ideal.normal_form(f); }

    /// Zero-dimensional iff every variable has a pure-power generator;
    /// then the monomial basis is finite.
    bool is_zero_dimensional() const;

    /// Monomials outside the ideal, of degree <= cap when given; without
    /// a cap the quotient must be zero-dimensional.
    std::vector<ExpKey> basis_monomials(std::optional<uint32_t> degree_cap = std::nullopt) const;
};

} // namespace wittquant::polyring
