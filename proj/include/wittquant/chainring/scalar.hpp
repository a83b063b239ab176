#pragma once

#include <cstdint>

#include "wittquant/chainring/modulus.hpp"

namespace wittquant::chainring {

// Raw residue helpers; callers keep values canonical in [0, pn).
inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t pn) {
    uint64_t s = a + b;
    return s >= pn ? s - pn : s;
}
inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t pn) {
    return a >= b ? a - b : a + pn - b;
}
inline uint64_t neg_mod(uint64_t a, uint64_t pn) { return a == 0 ? 0 : pn - a; }
inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t pn) { return (a * b) % pn; }

/// Inverse of a unit mod pn (extended Euclid); throws on non-units.
uint64_t inv_mod(uint64_t a, uint64_t pn);

/// Reduce a (possibly negative) machine integer to canonical form.
inline uint64_t canon_mod(int64_t a, uint64_t pn) {
    int64_t r = a % int64_t(pn);
    if (r < 0) r += int64_t(pn);
    return uint64_t(r);
}

/// Residue in Z/p^n with its modulus; canonical representative in [0, p^n).
class ZpnScalar {
public:
    ZpnScalar() = default;
    ZpnScalar(PModulus mod, int64_t value) : mod_(mod), v_(canon_mod(value, mod.pn)) {}

    const PModulus& modulus() const { return mod_; }
    uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % mod_.p != 0; }

    /// max{v <= n : p^v | value}, valuation(0) = n.
    uint32_t valuation() const { return mod_.valuation(v_); }

    ZpnScalar operator+(const ZpnScalar& o) const { return with(add_mod(v_, matched(o), mod_.pn)); }
    ZpnScalar operator-(const ZpnScalar& o) const { return with(sub_mod(v_, matched(o), mod_.pn)); }
    ZpnScalar operator*(const ZpnScalar& o) const { return with(mul_mod(v_, matched(o), mod_.pn)); }
    ZpnScalar operator-() const { return with(neg_mod(v_, mod_.pn)); }

    /// Multiplicative inverse; requires valuation 0.
    ZpnScalar invert() const;

    friend bool operator==(const ZpnScalar&, const ZpnScalar&) = default;

private:
    ZpnScalar with(uint64_t raw) const {
        ZpnScalar r;
        r.mod_ = mod_;
        r.v_ = raw;
        return r;
    }
    uint64_t matched(const ZpnScalar& o) const {
        if (!(mod_ == o.mod_)) throw domain_error("ZpnScalar: modulus mismatch");
        return o.v_;
    }

    PModulus mod_{};
    uint64_t v_ = 0;
};

/// Exact division by p^m: needs valuation(a) >= m and m < n; the result
/// lives in Z/p^(n-m).  Failing valuation signals a broken centrality
/// precondition upstream, so it is an error, not a truncation.
ZpnScalar exact_divide_by_p_power(const ZpnScalar& a, uint32_t m);

} // namespace wittquant::chainring
