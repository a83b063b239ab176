#pragma once

#include <concepts>
#include <cstdint>

#include <gmpxx.h>

#include "wittquant/chainring/modulus.hpp"
#include "wittquant/witt/int_poly.hpp"

namespace wittquant::witt {

/// Minimal coefficient-ring handle: what evaluating the universal Witt
/// structure polynomials needs, nothing more.  One Witt implementation
/// then serves F_p polynomial (quotient) rings, Z/p^n and the integers.
template <typename R>
concept CoefficientRing = requires(const R& r, const typename R::Elem& a,
                                   const typename R::Elem& b, const mpz_class& z) {
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.add(a, b) } -> std::same_as<typename R::Elem>;
    { r.mul(a, b) } -> std::same_as<typename R::Elem>;
    { r.neg(a) } -> std::same_as<typename R::Elem>;
    { r.equal(a, b) } -> std::same_as<bool>;
    { r.from_int(z) } -> std::same_as<typename R::Elem>;
    /// p when the ring has prime characteristic p, 0 otherwise.
    { r.char_p() } -> std::same_as<uint32_t>;
    { r.torsion_free() } -> std::same_as<bool>;
    /// The p of the Witt functor the ring participates in.
    { r.structure_prime() } -> std::same_as<uint32_t>;
};

/// Repeated squaring; rings with a cheap p-th power (freshman's dream)
/// expose `frobenius` and get picked up by ring_pth_power below.
template <typename R>
typename R::Elem ring_pow(const R& r, const typename R::Elem& a, uint64_t e) {
    typename R::Elem acc = r.one();
    typename R::Elem base = a;
    while (e > 0) {
        if (e & 1) acc = r.mul(acc, base);
        e >>= 1;
        if (e == 0) break;
        base = r.mul(base, base);
    }
    return acc;
}

/// a^(p^k), using the ring's frobenius hook when available.
template <typename R>
typename R::Elem ring_pth_power(const R& r, const typename R::Elem& a, uint32_t k) {
    if constexpr (requires(const R& rr, const typename R::Elem& x) {
                      { rr.frobenius(x) } -> std::same_as<typename R::Elem>;
                  }) {
        if (r.char_p() != 0) {
            typename R::Elem acc = a;
            for (uint32_t i = 0; i < k; ++i) acc = r.frobenius(acc);
            return acc;
        }
    }
    uint64_t exp = 1;
    for (uint32_t i = 0; i < k; ++i) exp *= r.structure_prime();
    return ring_pow(r, a, exp);
}

/// The ring of integers (mpz), torsion-free; the ghost oracle lives here.
struct IntRing {
    using Elem = mpz_class;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(const mpz_class& z) const { return z; }
    uint32_t char_p() const { return 0; }
    bool torsion_free() const { return true; }
    uint32_t structure_prime() const { return prime; }
    uint32_t prime = 3; // the p of the ambient Witt functor
};

/// Integer polynomials (torsion-free); used for symbolic ghost identities.
struct IntPolyRing {
    using Elem = IntPoly;
    Elem zero() const { return IntPoly(); }
    Elem one() const { return IntPoly(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(const mpz_class& z) const { return IntPoly(z); }
    uint32_t char_p() const { return 0; }
    bool torsion_free() const { return true; }
    uint32_t structure_prime() const { return prime; }
    uint32_t prime = 3;
};

/// Z/p^n as a coefficient ring (char p exactly when n = 1, where W_m(F_p)
/// reproduces Z/p^m).
struct ZpnRing {
    using Elem = uint64_t; // canonical residue
    chainring::PModulus mod;

    explicit ZpnRing(chainring::PModulus m) : mod(m) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1 % mod.pn; }
    Elem add(const Elem& a, const Elem& b) const { return chainring::add_mod(a, b, mod.pn); }
    Elem mul(const Elem& a, const Elem& b) const { return chainring::mul_mod(a, b, mod.pn); }
    Elem neg(const Elem& a) const { return chainring::neg_mod(a, mod.pn); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(const mpz_class& z) const {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(mod.pn));
        if (r < 0) r += static_cast<unsigned long>(mod.pn);
        return r.get_ui();
    }
    uint32_t char_p() const { return mod.n == 1 ? mod.p : 0; }
    bool torsion_free() const { return false; }
    uint32_t structure_prime() const { return mod.p; }
    Elem frobenius(const Elem& a) const { return ring_pow(*this, a, mod.p); }
};

} // namespace wittquant::witt
