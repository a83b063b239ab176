#pragma once

#include "wittquant/polyring/ideal.hpp"
#include "wittquant/witt/witt_vector.hpp"

namespace wittquant::polyring {

/// Coefficient-ring handle over a polynomial ring (optionally modulo a
/// monomial ideal); this is what Witt vectors over Z_1, S and B run on.
struct PolyRingHandle {
    using Elem = Polynomial;

    RingPtr desc;
    std::optional<MonomialIdeal> quotient;

    explicit PolyRingHandle(RingPtr d, std::optional<MonomialIdeal> q = std::nullopt)
        : desc(std::move(d)), quotient(std::move(q)) {}

    Elem reduce(const Elem& a) const { return quotient ? quotient->normal_form(a) : a; }

    Elem zero() const { return Polynomial(desc); }
    Elem one() const { return Polynomial::constant(desc, 1); }
    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(const mpz_class& z) const {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(desc->mod.pn));
        if (r < 0) r += static_cast<unsigned long>(desc->mod.pn);
        return Polynomial::constant(desc, int64_t(r.get_ui()));
    }
    uint32_t char_p() const { return desc->is_char_p() ? desc->mod.p : 0; }
    bool torsion_free() const { return false; }
    uint32_t structure_prime() const { return desc->mod.p; }
    Elem frobenius(const Elem& a) const { return reduce(a.pth_power(1)); }
};

static_assert(witt::CoefficientRing<PolyRingHandle>);

/// F^(n-1) d of a Witt vector over a char-p polynomial ring, in
/// coordinates: sum over i of z_i^(p^(n-i)-1) dz_i.
OneForm fd_composite(const witt::WittVector<PolyRingHandle>& z);

/// Bracketed component-list form of a Witt vector over a polynomial
/// coefficient ring, e.g. `[u^3 + v, 0, 2*u]`.
std::string witt_vector_str(const witt::WittVector<PolyRingHandle>& z);
witt::WittVector<PolyRingHandle> parse_witt_vector(std::shared_ptr<const PolyRingHandle> handle,
                                                   const std::string& text);

} // namespace wittquant::polyring
