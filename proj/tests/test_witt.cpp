#include <doctest.h>

#include <random>

#include "wittquant/polyring/handle.hpp"
#include "wittquant/witt/witt_vector.hpp"

using namespace wittquant;
using namespace wittquant::witt;
using polyring::MonomialIdeal;
using polyring::Polynomial;
using polyring::PolyRingHandle;

namespace {

IntPoly var(std::size_t slot) { return IntPoly::variable(slot); }

// Teichmuller representative of c in Z/p^m: c^(p^(m-1)); the classical
// isomorphism W_m(F_p) = Z/p^m sends z to sum p^(i-1) [z_i]^(p^(m-i)).
uint64_t teich(uint64_t c, uint64_t pm, uint32_t p, uint32_t m) {
    uint64_t e = 1;
    for (uint32_t i = 1; i < m; ++i) e *= p;
    uint64_t acc = 1 % pm;
    for (uint64_t i = 0; i < e; ++i) acc = acc * (c % pm) % pm;
    return acc;
}

uint64_t witt_to_zpm(const WittVector<ZpnRing>& z, uint32_t p, uint32_t m) {
    uint64_t pm = 1;
    for (uint32_t i = 0; i < m; ++i) pm *= p;
    uint64_t acc = 0, pi = 1;
    for (uint32_t i = 1; i <= m; ++i) {
        uint64_t lift = teich(z.component(i), pm, p, m + 1 - i);
        acc = (acc + pi * lift) % pm;
        pi *= p;
    }
    return acc;
}

std::shared_ptr<const PolyRingHandle> fp_uv_handle(uint32_t p) {
    auto ring = polyring::make_ring({"u", "v"}, chainring::PModulus(p, 1));
    return std::make_shared<PolyRingHandle>(ring);
}

/// F_3[u,v] truncated past total degree 4 (monomial quotient).
std::shared_ptr<const PolyRingHandle> truncated_handle(uint32_t p, uint32_t maxdeg) {
    auto ring = polyring::make_ring({"u", "v"}, chainring::PModulus(p, 1));
    std::vector<ExpKey> gens;
    for (const auto& k : monomials_up_to_degree(2, maxdeg + 1))
        if (k.degree() == maxdeg + 1) gens.push_back(k);
    return std::make_shared<PolyRingHandle>(ring, MonomialIdeal(ring, gens));
}

} // namespace

TEST_CASE("structure polynomials: degree-0 and the derived S_1 for p=3") {
    const auto& t3 = witt_structure_table(3, 2);
    CHECK(t3.sum_polys[0] == var(0) + var(2)); // S_0 = a_1 + b_1 (slots a at 0, b at m)
    CHECK(t3.prod_polys[0] == var(0) * var(2));
    // independent derivation: S_1 = a_2 + b_2 + (a_1^3 + b_1^3 - (a_1+b_1)^3)/3
    IntPoly s1 = var(1) + var(3) +
                 (var(0).pow(3) + var(2).pow(3) - (var(0) + var(2)).pow(3)).divexact(3);
    CHECK(t3.sum_polys[1] == s1);
    // which expands to a_2 + b_2 - a_1^2 b_1 - a_1 b_1^2
    IntPoly expanded = var(1) + var(3) - var(0).pow(2) * var(2) - var(0) * var(2).pow(2);
    CHECK(t3.sum_polys[1] == expanded);
}

TEST_CASE("structure polynomials satisfy the ghost identities symbolically") {
    IntPolyRing ring; // torsion-free
    for (uint32_t p : {3u, 5u, 7u}) {
        uint32_t maxm = p == 3 ? 3 : p == 5 ? 3 : 2;
        ring.prime = p;
        const auto& t = witt_structure_table(p, maxm);
        for (uint32_t k = 0; k < maxm; ++k) {
            IntPoly wa = WittStructureTable::ghost_poly(p, k, 0);
            IntPoly wb = WittStructureTable::ghost_poly(p, k, maxm);
            // w_k(S_0..S_k) evaluated symbolically
            std::vector<IntPoly> slots_s(t.sum_polys.begin(), t.sum_polys.begin() + k + 1);
            std::vector<IntPoly> slots_m(t.prod_polys.begin(), t.prod_polys.begin() + k + 1);
            IntPoly ghost_s = detail::eval_int_poly(ring, WittStructureTable::ghost_poly(p, k, 0),
                                                    slots_s);
            IntPoly ghost_m = detail::eval_int_poly(ring, WittStructureTable::ghost_poly(p, k, 0),
                                                    slots_m);
            CHECK(ghost_s == wa + wb);
            CHECK(ghost_m == wa * wb);
        }
    }
}

TEST_CASE("W_2(F_3) reproduces Z/9 through the Teichmuller correspondence") {
    auto ring = std::make_shared<ZpnRing>(chainring::PModulus(3, 1));
    auto mk = [&](uint64_t a, uint64_t b) {
        WittVector<ZpnRing> z{ring, {a, b}};
        return z;
    };
    // fixed correspondence values
    CHECK(witt_equal(witt_add(mk(1, 0), mk(2, 0)), mk(0, 0)));
    CHECK(witt_equal(witt_mul(mk(2, 0), mk(2, 0)), mk(1, 0)));
    auto a = mk(2, 1);
    CHECK(witt_equal(witt_add(a, mk(0, 0)), a));
    // exhaustive correspondence
    for (uint64_t a1 = 0; a1 < 3; ++a1)
        for (uint64_t a2 = 0; a2 < 3; ++a2)
            for (uint64_t b1 = 0; b1 < 3; ++b1)
                for (uint64_t b2 = 0; b2 < 3; ++b2) {
                    auto x = mk(a1, a2), y = mk(b1, b2);
                    CHECK(witt_to_zpm(witt_add(x, y), 3, 2) ==
                          (witt_to_zpm(x, 3, 2) + witt_to_zpm(y, 3, 2)) % 9);
                    CHECK(witt_to_zpm(witt_mul(x, y), 3, 2) ==
                          (witt_to_zpm(x, 3, 2) * witt_to_zpm(y, 3, 2)) % 9);
                }
}

TEST_CASE("witt ring axioms over a truncated polynomial coefficient ring") {
    auto h = truncated_handle(3, 4);
    std::mt19937_64 eng(3);
    auto sample = [&](uint32_t m) {
        WittVector<PolyRingHandle> z{h, {}};
        for (uint32_t i = 0; i < m; ++i) {
            Polynomial f(h->desc);
            auto monos = monomials_up_to_degree(2, 2);
            for (int t = 0; t < 2; ++t)
                f.add_term(monos[eng() % monos.size()], int64_t(1 + eng() % 2));
            z.comps.push_back(h->reduce(f));
        }
        return z;
    };
    for (uint32_t m = 1; m <= 3; ++m)
        for (int rep = 0; rep < 34; ++rep) {
            auto a = sample(m), b = sample(m), c = sample(m);
            CHECK(witt_equal(witt_add(a, b), witt_add(b, a)));
            CHECK(witt_equal(witt_mul(a, b), witt_mul(b, a)));
            CHECK(witt_equal(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c))));
            CHECK(witt_equal(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c))));
            CHECK(witt_equal(witt_mul(a, witt_add(b, c)),
                             witt_add(witt_mul(a, b), witt_mul(a, c))));
            CHECK(witt_equal(witt_add(a, witt_neg(a)), witt_zero(h, m)));
        }
}

TEST_CASE("frobenius, verschiebung and teichmuller over char-p rings") {
    auto h = fp_uv_handle(3);
    auto u = Polynomial::variable(h->desc, "u");
    auto v = Polynomial::variable(h->desc, "v");
    // V(0) = 0
    CHECK(witt_equal(verschiebung(witt_zero(h, 2)), witt_zero(h, 3)));
    // F((u, v)) = (u^3)
    WittVector<PolyRingHandle> uv{h, {u, v}};
    auto fu = frobenius(uv);
    CHECK(fu.length() == 1);
    CHECK(fu.component(1) == u.pth_power(1));
    CHECK_THROWS_AS(frobenius(WittVector<PolyRingHandle>{h, {u}}), domain_error);
    // V(F(a)) = p*a, with p*a computed as a + a + a
    std::mt19937_64 eng(9);
    auto monos = monomials_up_to_degree(2, 2);
    for (uint32_t m = 2; m <= 3; ++m)
        for (int rep = 0; rep < 10; ++rep) {
            WittVector<PolyRingHandle> a{h, {}};
            for (uint32_t i = 0; i < m; ++i) {
                Polynomial f(h->desc);
                f.add_term(monos[eng() % monos.size()], int64_t(1 + eng() % 2));
                a.comps.push_back(f);
            }
            auto pa = witt_add(witt_add(a, a), a);
            CHECK(witt_equal(verschiebung(frobenius(a)), pa));
            auto fv = frobenius(verschiebung(a)); // FV = p at length m
            CHECK(witt_equal(fv, pa));
        }
    // teichmuller is multiplicative
    for (int rep = 0; rep < 10; ++rep) {
        Polynomial f(h->desc), g(h->desc);
        f.add_term(monos[eng() % monos.size()], int64_t(1 + eng() % 2));
        g.add_term(monos[eng() % monos.size()], int64_t(1 + eng() % 2));
        CHECK(witt_equal(witt_mul(teichmuller(h, f, 3), teichmuller(h, g, 3)),
                         teichmuller(h, f * g, 3)));
    }
}

TEST_CASE("ghost components over torsion-free rings") {
    IntPolyRing ring;
    ring.prime = 3;
    auto h = std::make_shared<IntPolyRing>(ring);
    // ghost((x, 0)) = (x, x^3), ghost((0, 1)) = (0, 3)
    WittVector<IntPolyRing> x0{h, {IntPoly::variable(0), IntPoly()}};
    auto g = ghost(x0);
    CHECK(g[0] == IntPoly::variable(0));
    CHECK(g[1] == IntPoly::variable(0).pow(3));
    WittVector<IntPolyRing> e2{h, {IntPoly(), IntPoly(1)}};
    auto g2 = ghost(e2);
    CHECK(g2[0] == IntPoly());
    CHECK(g2[1] == IntPoly(3));
    // additivity of ghost on random integer vectors
    auto ih = std::make_shared<IntRing>(IntRing{3});
    std::mt19937_64 eng(17);
    for (int rep = 0; rep < 25; ++rep) {
        WittVector<IntRing> a{ih, {}}, b{ih, {}};
        for (int i = 0; i < 3; ++i) {
            a.comps.push_back(mpz_class(int64_t(eng() % 19) - 9));
            b.comps.push_back(mpz_class(int64_t(eng() % 19) - 9));
        }
        auto gs = ghost(witt_add(a, b));
        auto ga = ghost(a), gb = ghost(b);
        for (int k = 0; k < 3; ++k) CHECK(gs[k] == ga[k] + gb[k]);
        auto gm = ghost(witt_mul(a, b));
        for (int k = 0; k < 3; ++k) CHECK(gm[k] == ga[k] * gb[k]);
    }
    // torsion-free frobenius shifts the ghost sequence
    for (int rep = 0; rep < 25; ++rep) {
        WittVector<IntRing> a{ih, {}};
        for (int i = 0; i < 3; ++i) a.comps.push_back(mpz_class(int64_t(eng() % 15) - 7));
        auto ga = ghost(a);
        auto gf = ghost(frobenius(a));
        CHECK(gf[0] == ga[1]);
        CHECK(gf[1] == ga[2]);
    }
    // ghost over a char-p ring is rejected
    auto fph = fp_uv_handle(3);
    WittVector<PolyRingHandle> z{fph, {Polynomial::variable(fph->desc, "u")}};
    CHECK_THROWS_AS(ghost(z), domain_error);
}

TEST_CASE("structure table guard") {
    CHECK_THROWS_AS(witt_structure_table(11, 2), domain_error);
    CHECK_THROWS_AS(witt_structure_table(3, 5), domain_error);
}
