#pragma once

#include "wittquant/polyring/forms.hpp"

namespace wittquant::polyring {

/// Standard symplectic bracket on a ring with pairs (u_i, v_i):
///   {f, g} = pairing_sign * sum_i (df/du_i dg/dv_i - df/dv_i dg/du_i).
/// The orientation {u, v} = +1 (default sign) is the convention every
/// downstream sign check is relative to.
Polynomial std_poisson(const Polynomial& f, const Polynomial& g);

/// k-linear derivation of the ring, represented by its values on the
/// variables (which determine it on a polynomial ring).
struct Derivation {
    RingPtr ring;
    std::vector<Polynomial> values; // values[slot] = D(x_slot)

    explicit Derivation(RingPtr r);

    Polynomial apply(const Polynomial& f) const;

    bool operator==(const Derivation& o) const { return values == o.values; }
};

/// The symplectic identification of forms with derivations,
/// iota(g df) = g {f, -}; linear, and iota_inverse is a two-sided
/// inverse on 1-forms.
Derivation iota(const OneForm& w);
OneForm iota_inverse(const Derivation& d);

} // namespace wittquant::polyring
