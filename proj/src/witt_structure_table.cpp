#include "wittquant/witt/structure_table.hpp"

#include <map>
#include <mutex>

#include "wittquant/chainring/modulus.hpp"

namespace wittquant::witt {

IntPoly WittStructureTable::ghost_poly(uint32_t p, uint32_t k, std::size_t offset) {
    IntPoly w;
    mpz_class pi = 1;
    for (uint32_t i = 0; i <= k; ++i) {
        uint64_t exp = 1;
        for (uint32_t j = 0; j + i < k; ++j) exp *= p;
        w = w + IntPoly::variable(offset + i, uint16_t(exp)).scaled(pi);
        pi *= p;
    }
    return w;
}

namespace {

WittStructureTable build_table(uint32_t p, uint32_t m) {
    WittStructureTable t;
    t.p = p;
    t.length = m;
    mpz_class pk = 1; // p^k
    for (uint32_t k = 0; k < m; ++k) {
        IntPoly wa = WittStructureTable::ghost_poly(p, k, 0);
        IntPoly wb = WittStructureTable::ghost_poly(p, k, m);
        IntPoly s = wa + wb;
        IntPoly pr = wa * wb;
        mpz_class pi = 1;
        for (uint32_t i = 0; i < k; ++i) {
            uint64_t exp = 1;
            for (uint32_t j = 0; j + i < k; ++j) exp *= p;
            s = s - t.sum_polys[i].pow(exp).scaled(pi);
            pr = pr - t.prod_polys[i].pow(exp).scaled(pi);
            pi *= p;
        }
        t.sum_polys.push_back(s.divexact(pk));
        t.prod_polys.push_back(pr.divexact(pk));
        pk *= p;
    }
    // Frobenius: w_k(F(z)) = w_{k+1}(z), solved by the same recursion.
    pk = 1;
    for (uint32_t k = 0; k + 1 < m; ++k) {
        IntPoly f = WittStructureTable::ghost_poly(p, k + 1, 0);
        mpz_class pi = 1;
        for (uint32_t i = 0; i < k; ++i) {
            uint64_t exp = 1;
            for (uint32_t j = 0; j + i < k; ++j) exp *= p;
            f = f - t.frob_polys[i].pow(exp).scaled(pi);
            pi *= p;
        }
        t.frob_polys.push_back(f.divexact(pk));
        pk *= p;
    }
    return t;
}

} // namespace

const WittStructureTable& witt_structure_table(uint32_t p, uint32_t m, bool relax_guard) {
    if (!chainring::is_odd_prime(p))
        throw domain_error("witt_structure_table: p must be an odd prime");
    if (m < 1) throw domain_error("witt_structure_table: length must be >= 1");
    if (!relax_guard && (m > 4 || p > 7))
        throw domain_error("witt_structure_table: guarded at m <= 4, p <= 7");
    if (2 * m > ExpKey::capacity)
        throw domain_error("witt_structure_table: length exceeds exponent-key capacity");

    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<WittStructureTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, m}];
    if (!slot) slot = std::make_unique<WittStructureTable>(build_table(p, m));
    return *slot;
}

} // namespace wittquant::witt
