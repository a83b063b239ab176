// Acceptance suite: one test case per criterion, each printing a
// [ACCEPT] verdict line with its wall time.  Tolerances are exact
// (everything here is exact arithmetic); the stated time budgets are
// asserted too.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <set>

#include "wittquant/harness/scenario.hpp"
#include "wittquant/quantization/phi.hpp"
#include "wittquant/quantization/spans.hpp"

using namespace wittquant;
using namespace wittquant::harness;
using namespace wittquant::quantization;
using polyring::Polynomial;
using polyring::PolyRingHandle;
using witt::WittVector;
using witt::ZpnRing;

namespace {

struct Criterion {
    const char* id;
    const char* name;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    void report(bool ok, double budget_s) const {
        double s = seconds();
        std::printf("[ACCEPT] %s %-28s %s (%.2f s, budget %.0f s)\n", id, name,
                    ok ? "PASS" : "FAIL", s, budget_s);
        std::fflush(stdout);
        CHECK(ok);
        CHECK(s < budget_s);
    }
};

uint64_t teich_pow(uint64_t c, uint32_t e_p_pow, uint32_t p, uint64_t pm) {
    uint64_t e = 1;
    for (uint32_t i = 0; i < e_p_pow; ++i) e *= p;
    uint64_t acc = 1 % pm;
    for (uint64_t i = 0; i < e; ++i) acc = acc * (c % pm) % pm;
    return acc;
}

} // namespace

TEST_CASE("A1: W_2(F_3) matches Z/9 exhaustively") {
    Criterion cr{"A1", "witt-oracle"};
    auto ring = std::make_shared<ZpnRing>(chainring::PModulus(3, 1));
    auto iso = [&](const WittVector<ZpnRing>& z) {
        // z -> [z_1]^3 + 3 [z_2], Teichmuller-lifted componentwise
        return (teich_pow(z.component(1), 1, 3, 9) + 3 * teich_pow(z.component(2), 0, 3, 9)) % 9;
    };
    bool ok = true;
    for (uint64_t a = 0; a < 9; ++a)
        for (uint64_t b = 0; b < 9; ++b) {
            WittVector<ZpnRing> x{ring, {a % 3, a / 3}};
            WittVector<ZpnRing> y{ring, {b % 3, b / 3}};
            ok = ok && iso(witt_add(x, y)) == (iso(x) + iso(y)) % 9;
            ok = ok && iso(witt_mul(x, y)) == (iso(x) * iso(y)) % 9;
        }
    // the correspondence is a bijection from the 9 Witt vectors onto Z/9
    std::set<uint64_t> image;
    for (uint64_t a = 0; a < 9; ++a) {
        WittVector<ZpnRing> x{ring, {a % 3, a / 3}};
        image.insert(iso(x));
    }
    ok = ok && image.size() == 9;
    cr.report(ok, 1.0);
}

TEST_CASE("A2: phi is a ring homomorphism into the center") {
    Criterion cr{"A2", "phi-ring-hom+central"};
    ScenarioConfig hom = find_scenario("phi-ring-hom").defaults; // p=3, n=3, 100 samples
    ScenarioConfig cen = find_scenario("phi-central").defaults;
    auto r1 = run_scenario(hom);
    auto r2 = run_scenario(cen);
    cr.report(r1.verdict == "pass" && r1.failures == 0 && r2.verdict == "pass" &&
                  r2.failures == 0 && r1.cases == 100 && r2.cases == 100,
              30.0);
}

TEST_CASE("A3: Frobenius/Verschiebung compatibilities") {
    Criterion cr{"A3", "phi-compat"};
    auto rep = run_scenario(find_scenario("phi-compat").defaults);
    cr.report(rep.verdict == "pass" && rep.failures == 0 && rep.cases == 100, 30.0);
}

TEST_CASE("A4: divided-commutator derivation identity") {
    Criterion cr{"A4", "eq1"};
    ScenarioConfig cfg = find_scenario("eq1").defaults; // p=3, m=2, 50 samples
    auto rep = run_scenario(cfg);
    cr.report(rep.verdict == "pass" && rep.failures == 0 && rep.cases == 50, 60.0);
}

TEST_CASE("A5: center structure Z_1^p = Z_2 mod p at degree 9") {
    Criterion cr{"A5", "center-structure"};
    ScenarioConfig cfg = find_scenario("center-structure").defaults; // level 2, degree 9
    auto rep = run_scenario(cfg);
    cr.report(rep.verdict == "pass" && rep.failures == 0, 30.0);
}

TEST_CASE("A6: bracket orientation and agreement with the symplectic bracket") {
    Criterion cr{"A6", "deformation-bracket"};
    // {x^3-bar, y^3-bar} = +1, derived from y^3 x^3 = x^3y^3 + 9x^2y^2 + 18xy + 6
    auto alg = make_weyl_algebra(3, 2);
    auto z1 = center_ring(alg);
    auto u = Polynomial::variable(z1, "u"), v = Polynomial::variable(z1, "v");
    bool orient = deformation_bracket(alg, z1, lift_center(alg, 1, u),
                                      lift_center(alg, 1, v)) == Polynomial::constant(z1, 1);
    // integer expansion cross-check at level 4, where 9 and 18 are visible
    auto alg4 = make_weyl_algebra(3, 4);
    auto x = WeylElement::generator(alg4, 4, "x");
    auto y = WeylElement::generator(alg4, 4, "y");
    WeylElement expansion = x.pow(3) * y.pow(3) +
                            (x.pow(2) * y.pow(2)).scaled(9) + (x * y).scaled(18) +
                            WeylElement::constant(alg4, 4, 6);
    bool integer_ok = y.pow(3) * x.pow(3) == expansion;
    auto rep = run_scenario(find_scenario("deformation-vs-std-poisson").defaults);
    cr.report(orient && integer_ok && rep.verdict == "pass" && rep.failures == 0 &&
                  rep.cases == 51, // 50 samples + the orientation pin
              30.0);
}

TEST_CASE("A7: the non-flat counterexample and the center shrink") {
    Criterion cr{"A7", "remark-counterexample"};
    auto rep = run_scenario(find_scenario("remark-counterexample").defaults); // d = 12
    bool witness_ok = false;
    for (const auto& w : rep.witnesses)
        if (w.value("kind", "") == "non-central-ideal-witness")
            witness_ok = w.value("element", "") == "p=3 n=2 level=2 r=1; x^3";
    auto shrink = run_scenario(find_scenario("center-shrink").defaults); // d = 12
    cr.report(rep.verdict == "pass" && witness_ok && shrink.verdict == "pass", 60.0);
}

TEST_CASE("A8: centrally generated flat ideals verify as generated") {
    Criterion cr{"A8", "theorem-flat-ideal"};
    auto rep = run_scenario(find_scenario("theorem-flat-ideal").defaults); // 20 ideals
    cr.report(rep.verdict == "pass" && rep.failures == 0 && rep.cases == 20, 120.0);
}

TEST_CASE("A9: Cartier closedness and the exhaustive decomposition search") {
    Criterion cr{"A9", "cartier+lemma-muh"};
    auto cart = run_scenario(find_scenario("cartier").defaults); // 50 presentations
    auto muh = run_scenario(find_scenario("lemma-muh").defaults); // exhaustive F_3[t]/(t^9)
    cr.report(cart.verdict == "pass" && cart.failures == 0 && muh.verdict == "pass" &&
                  muh.failures == 0,
              120.0);
}

TEST_CASE("A10: mutation sensitivity, the suite is not vacuous") {
    Criterion cr{"A10", "mutation-sensitivity"};
    bool ok = true;
    for (Mutation m : {Mutation::flip_weyl_sign, Mutation::flip_pairing_sign}) {
        ScenarioConfig eq1 = find_scenario("eq1").defaults;
        ScenarioConfig dvp = find_scenario("deformation-vs-std-poisson").defaults;
        eq1.samples = 8;
        dvp.samples = 8;
        if (m == Mutation::flip_weyl_sign) eq1.weyl_sign = dvp.weyl_sign = -1;
        else eq1.pairing_sign = dvp.pairing_sign = -1;
        ok = ok && run_scenario(eq1).verdict == "fail";
        ok = ok && run_scenario(dvp).verdict == "fail";
    }
    cr.report(ok, 60.0);
}
