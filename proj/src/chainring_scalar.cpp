#include "wittquant/chainring/scalar.hpp"

namespace wittquant::chainring {

uint64_t inv_mod(uint64_t a, uint64_t pn) {
    // extended Euclid on (a, pn)
    int64_t r0 = int64_t(pn), r1 = int64_t(a % pn);
    int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw domain_error("inv_mod: not a unit");
    return canon_mod(s0, pn);
}

ZpnScalar ZpnScalar::invert() const {
    if (!is_unit()) throw domain_error("ZpnScalar::invert: non-unit (valuation > 0)");
    return ZpnScalar(mod_, int64_t(inv_mod(v_, mod_.pn)));
}

ZpnScalar exact_divide_by_p_power(const ZpnScalar& a, uint32_t m) {
    const PModulus& mod = a.modulus();
    if (m >= mod.n)
        throw domain_error("exact_divide_by_p_power: target length would drop below 1");
    if (a.valuation() < m)
        throw domain_error("exact_divide_by_p_power: insufficient valuation");
    PModulus lower(mod.p, mod.n - m);
    return ZpnScalar(lower, int64_t(a.value() / mod.p_pow(m)));
}

} // namespace wittquant::chainring
