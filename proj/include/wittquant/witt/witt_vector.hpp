#pragma once

#include <memory>
#include <vector>

#include "wittquant/witt/rings.hpp"
#include "wittquant/witt/structure_table.hpp"

namespace wittquant::witt {

/// Length-m p-typical Witt vector over a coefficient ring handle.
/// Components are 1-indexed on every public surface: z.component(1) is
/// z_1.  The ring handle is shared, never copied per element.
template <CoefficientRing R>
struct WittVector {
    std::shared_ptr<const R> ring;
    std::vector<typename R::Elem> comps; // comps[0] = z_1

    uint32_t length() const { return uint32_t(comps.size()); }
    const typename R::Elem& component(uint32_t i) const { // 1-indexed
        if (i < 1 || i > comps.size()) throw domain_error("WittVector: component index");
        return comps[i - 1];
    }
};

template <CoefficientRing R>
WittVector<R> witt_zero(std::shared_ptr<const R> ring, uint32_t m) {
    WittVector<R> z{ring, {}};
    z.comps.assign(m, ring->zero());
    return z;
}

/// Teichmuller lift tau(x) = (x, 0, ..., 0); multiplicative.
template <CoefficientRing R>
WittVector<R> teichmuller(std::shared_ptr<const R> ring, const typename R::Elem& x, uint32_t m) {
    WittVector<R> z = witt_zero(ring, m);
    z.comps[0] = x;
    return z;
}

template <CoefficientRing R>
bool witt_equal(const WittVector<R>& a, const WittVector<R>& b) {
    if (a.length() != b.length()) return false;
    for (uint32_t i = 0; i < a.length(); ++i)
        if (!a.ring->equal(a.comps[i], b.comps[i])) return false;
    return true;
}

namespace detail {

/// Evaluate an integer structure polynomial at ring elements bound to
/// the variable slots, with a per-slot squaring cache for the p-power
/// exponents.
template <CoefficientRing R>
typename R::Elem eval_int_poly(const R& r, const IntPoly& poly,
                               const std::vector<typename R::Elem>& slots) {
    // cache[s][j] = slots[s]^(2^j)
    std::vector<std::vector<typename R::Elem>> cache(slots.size());
    auto power_of = [&](std::size_t s, uint32_t e) {
        typename R::Elem acc = r.one();
        auto& c = cache[s];
        if (c.empty()) c.push_back(slots[s]);
        uint32_t bit = 0;
        while ((uint32_t(1) << bit) <= e) {
            while (bit >= c.size()) c.push_back(r.mul(c.back(), c.back()));
            if (e & (uint32_t(1) << bit)) acc = r.mul(acc, c[bit]);
            ++bit;
        }
        return acc;
    };
    typename R::Elem out = r.zero();
    for (const auto& [key, coef] : poly.terms()) {
        typename R::Elem t = r.from_int(coef);
        for (std::size_t s = 0; s < slots.size() && s < ExpKey::capacity; ++s)
            if (key.e[s] != 0) t = r.mul(t, power_of(s, key.e[s]));
        out = r.add(out, t);
    }
    return out;
}

template <CoefficientRing R>
std::vector<typename R::Elem> bind_ab(const WittVector<R>& a, const WittVector<R>& b) {
    uint32_t m = a.length();
    std::vector<typename R::Elem> slots;
    slots.reserve(2 * m);
    for (uint32_t i = 0; i < m; ++i) slots.push_back(a.comps[i]);
    for (uint32_t i = 0; i < m; ++i) slots.push_back(b.comps[i]);
    return slots;
}

template <CoefficientRing R>
void require_compatible(const WittVector<R>& a, const WittVector<R>& b) {
    if (a.length() != b.length()) throw domain_error("witt: length mismatch");
    if (a.ring.get() != b.ring.get()) throw domain_error("witt: coefficient ring mismatch");
}

} // namespace detail

template <CoefficientRing R>
WittVector<R> witt_add(const WittVector<R>& a, const WittVector<R>& b) {
    detail::require_compatible(a, b);
    const auto& t = witt_structure_table(a.ring->structure_prime(), a.length());
    auto slots = detail::bind_ab(a, b);
    WittVector<R> out{a.ring, {}};
    for (uint32_t k = 0; k < a.length(); ++k)
        out.comps.push_back(detail::eval_int_poly(*a.ring, t.sum_polys[k], slots));
    return out;
}

template <CoefficientRing R>
WittVector<R> witt_mul(const WittVector<R>& a, const WittVector<R>& b) {
    detail::require_compatible(a, b);
    const auto& t = witt_structure_table(a.ring->structure_prime(), a.length());
    auto slots = detail::bind_ab(a, b);
    WittVector<R> out{a.ring, {}};
    for (uint32_t k = 0; k < a.length(); ++k)
        out.comps.push_back(detail::eval_int_poly(*a.ring, t.prod_polys[k], slots));
    return out;
}

/// For odd p negation is componentwise (all ghost exponents are odd).
template <CoefficientRing R>
WittVector<R> witt_neg(const WittVector<R>& a) {
    WittVector<R> out{a.ring, {}};
    for (const auto& c : a.comps) out.comps.push_back(a.ring->neg(c));
    return out;
}

template <CoefficientRing R>
WittVector<R> witt_sub(const WittVector<R>& a, const WittVector<R>& b) {
    return witt_add(a, witt_neg(b));
}

/// V(z_1, ..., z_m) = (0, z_1, ..., z_m); additive.
template <CoefficientRing R>
WittVector<R> verschiebung(const WittVector<R>& a) {
    WittVector<R> out{a.ring, {}};
    out.comps.push_back(a.ring->zero());
    for (const auto& c : a.comps) out.comps.push_back(c);
    return out;
}

/// F : W_m -> W_{m-1}.  Over a characteristic-p ring F(z)_i = z_i^p;
/// over a torsion-free ring the universal ghost-shifted polynomials
/// apply.  Anything else is rejected.
template <CoefficientRing R>
WittVector<R> frobenius(const WittVector<R>& a) {
    uint32_t m = a.length();
    if (m < 2) throw domain_error("frobenius: needs length >= 2");
    uint32_t p = a.ring->structure_prime();
    WittVector<R> out{a.ring, {}};
    if (a.ring->char_p() == p) {
        for (uint32_t i = 0; i + 1 < m; ++i)
            out.comps.push_back(ring_pth_power(*a.ring, a.comps[i], 1));
        return out;
    }
    if (!a.ring->torsion_free())
        throw domain_error("frobenius: ring is neither characteristic p nor torsion-free");
    const auto& t = witt_structure_table(p, m);
    // frobenius polynomials use only the a-slots
    std::vector<typename R::Elem> slots = a.comps;
    for (uint32_t k = 0; k + 1 < m; ++k)
        out.comps.push_back(detail::eval_int_poly(*a.ring, t.frob_polys[k], slots));
    return out;
}

/// Ghost components w_1..w_m (1-indexed):
/// w_k(z) = sum over i <= k of p^(i-1) z_i^(p^(k-i)).  Torsion-free only.
template <CoefficientRing R>
std::vector<typename R::Elem> ghost(const WittVector<R>& a) {
    if (!a.ring->torsion_free())
        throw domain_error("ghost: requires a torsion-free coefficient ring");
    uint32_t p = a.ring->structure_prime();
    std::vector<typename R::Elem> out;
    for (uint32_t k = 1; k <= a.length(); ++k) {
        typename R::Elem acc = a.ring->zero();
        mpz_class pi = 1;
        for (uint32_t i = 1; i <= k; ++i) {
            uint64_t exp = 1;
            for (uint32_t j = i; j < k; ++j) exp *= p;
            acc = a.ring->add(acc, a.ring->mul(a.ring->from_int(pi),
                                               ring_pow(*a.ring, a.comps[i - 1], exp)));
            pi *= p;
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace wittquant::witt
