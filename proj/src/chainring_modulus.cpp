#include "wittquant/chainring/modulus.hpp"

namespace wittquant::chainring {

bool is_odd_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PModulus::PModulus(uint32_t p_, uint32_t n_) : p(p_), n(n_) {
    if (!is_odd_prime(p)) throw domain_error("PModulus: p must be an odd prime >= 3");
    if (n < 1) throw domain_error("PModulus: length n must be >= 1");
    // p^n must stay comfortably inside uint64 so products of residues fit too
    pn = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (pn > (uint64_t(1) << 30) / p) throw domain_error("PModulus: p^n too large");
        pn *= p;
    }
}

uint64_t PModulus::p_pow(uint32_t k) const {
    if (k > n) throw domain_error("PModulus: power exceeds length");
    uint64_t r = 1;
    for (uint32_t i = 0; i < k; ++i) r *= p;
    return r;
}

uint32_t PModulus::valuation(uint64_t value) const {
    if (value == 0) return n;
    uint32_t v = 0;
    while (v < n && value % p == 0) {
        value /= p;
        ++v;
    }
    return v;
}

std::string PModulus::str() const {
    return "Z/" + std::to_string(p) + "^" + std::to_string(n);
}

} // namespace wittquant::chainring
