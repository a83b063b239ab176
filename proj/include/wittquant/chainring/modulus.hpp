#pragma once

#include <cstdint>
#include <string>

#include "wittquant/errors.hpp"

namespace wittquant::chainring {

/// The chain-ring modulus p^n for an odd prime p and length n >= 1.
/// Everything downstream (scalars, matrices, Weyl coefficients) carries
/// one of these.
struct PModulus {
    uint32_t p = 3;
    uint32_t n = 1;
    uint64_t pn = 3; // cached p^n

    PModulus() = default;
    PModulus(uint32_t p_, uint32_t n_);

    friend bool operator==(const PModulus&, const PModulus&) = default;

    /// p^k for k <= n.
    uint64_t p_pow(uint32_t k) const;

    /// max{v <= n : p^v | value}, with valuation(0) = n.
    uint32_t valuation(uint64_t value) const;

    std::string str() const;
};

bool is_odd_prime(uint32_t p);

} // namespace wittquant::chainring
