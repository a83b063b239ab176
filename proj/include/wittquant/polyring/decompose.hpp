#pragma once

#include "wittquant/polyring/ideal.hpp"

namespace wittquant::polyring {

/// Outcome of the B^p + m^(p^i) B membership test, with the decomposition
/// z = a^p + b as the certificate when it exists.
struct PthPowerDecomposition {
    bool member = false;
    Polynomial root;      // a
    Polynomial remainder; // b, in m^(p^i) B
};

/// Decide z ∈ B^p + m^(p^i) B as an F_p-linear subspace question over the
/// monomial basis of B (B^p is F_p-linear since c^p = c for c in F_p).
/// B must have a finite monomial basis or a degree cap must be supplied;
/// the subspace is monomial-graded, so a cap never changes low-degree
/// answers.
PthPowerDecomposition pth_power_decomposition_check(const Polynomial& z, uint32_t i,
                                                    const MonomialIdeal& m,
                                                    const QuotientRing& B,
                                                    std::optional<uint32_t> degree_cap = std::nullopt);

} // namespace wittquant::polyring
