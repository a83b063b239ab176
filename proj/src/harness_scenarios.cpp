#include "wittquant/harness/scenario.hpp"

#include <algorithm>
#include <chrono>

#include "wittquant/harness/sampler.hpp"
#include "wittquant/polyring/decompose.hpp"
#include "wittquant/quantization/phi.hpp"
#include "wittquant/quantization/spans.hpp"

namespace wittquant::harness {

using namespace quantization;
using polyring::MonomialIdeal;
using polyring::OneForm;
using polyring::Polynomial;
using polyring::PolyRingHandle;
using polyring::QuotientRing;
using polyring::RingPtr;
using witt::WittVector;

namespace {

// ---------------------------------------------------------------- plumbing

struct Ctx {
    AlgebraPtr alg;
    RingPtr z1;
    std::shared_ptr<const PolyRingHandle> z1h;
};

Ctx make_ctx(const ScenarioConfig& cfg) {
    Ctx c;
    c.alg = make_weyl_algebra(cfg.p, cfg.n, cfg.r, cfg.weyl_sign);
    c.z1 = center_ring(c.alg, cfg.pairing_sign);
    c.z1h = std::make_shared<PolyRingHandle>(c.z1);
    return c;
}

using polyring::parse_witt_vector;
using polyring::witt_vector_str;

class Runner {
public:
    Runner(const ScenarioConfig& cfg, Polarity polarity)
        : polarity_(polarity), t0_(std::chrono::steady_clock::now()) {
        rep_.scenario = cfg.scenario;
        rep_.params = cfg.to_json();
    }

    template <typename WitnessFn>
        requires std::invocable<WitnessFn&>
    void check(bool holds, WitnessFn&& witness) {
        ++rep_.cases;
        if (!holds) {
            ++rep_.failures;
            if (rep_.witnesses.size() < 16) rep_.witnesses.push_back(witness());
        }
    }
    void check(bool holds, const nlohmann::json& witness) {
        check(holds, [&] { return witness; });
    }

    /// Record a witness object without counting a failure (used when the
    /// interesting element belongs in a passing report).
    void note_witness(nlohmann::json w) { rep_.witnesses.push_back(std::move(w)); }

    uint64_t failures() const { return rep_.failures; }

    ScenarioReport finish() {
        bool observed_ok = polarity_ == Polarity::expect_holds
                               ? rep_.failures == 0
                               : (rep_.cases > 0 && rep_.failures == rep_.cases);
        rep_.verdict = observed_ok ? "pass" : "fail";
        if (!observed_ok && rep_.witnesses.empty())
            rep_.witnesses.push_back({{"kind", "unexpected-outcome"},
                                      {"note", "observed polarity differs from the expected one"}});
        rep_.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0_)
                              .count();
        return rep_;
    }

    ScenarioReport finish_inconclusive(const std::string& note) {
        rep_.verdict = "inconclusive";
        rep_.witnesses.push_back({{"kind", "inconclusive"}, {"note", note}});
        rep_.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0_)
                              .count();
        return rep_;
    }

private:
    ScenarioReport rep_;
    Polarity polarity_;
    std::chrono::steady_clock::time_point t0_;
};

uint32_t pick_length(const ScenarioConfig& cfg, uint64_t i) {
    if (cfg.witt_length) return cfg.witt_length;
    return std::min<uint32_t>(cfg.n, 2 + uint32_t(i % 2));
}

// ------------------------------------------------------------- phi family

ScenarioReport sc_phi_ring_hom(const ScenarioConfig& cfg) {
    Ctx c = make_ctx(cfg);
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        uint32_t m = pick_length(cfg, i);
        auto z = smp.witt_vector(c.z1h, m, cfg.component_degree, cfg.max_terms);
        auto w = smp.witt_vector(c.z1h, m, cfg.component_degree, cfg.max_terms);
        WeylElement pz = phi_map(c.alg, z, m), pw = phi_map(c.alg, w, m);
        bool add_ok = (pz + pw) == phi_map(c.alg, witt_add(z, w), m);
        bool mul_ok = (pz * pw) == phi_map(c.alg, witt_mul(z, w), m);
        run.check(add_ok && mul_ok, [&] {
            return nlohmann::json{{"kind", "phi-ring-hom"},
                                  {"m", m},
                                  {"z", witt_vector_str(z)},
                                  {"w", witt_vector_str(w)},
                                  {"add_ok", add_ok},
                                  {"mul_ok", mul_ok}};
        });
    }
    return run.finish();
}

ScenarioReport sc_phi_central(const ScenarioConfig& cfg) {
    Ctx c = make_ctx(cfg);
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        uint32_t m = pick_length(cfg, i);
        auto z = smp.witt_vector(c.z1h, m, cfg.component_degree, cfg.max_terms);
        WeylElement pz = phi_map(c.alg, z, m);
        bool ok = true;
        for (const auto& name : c.alg->var_names)
            ok = ok && commutator(pz, WeylElement::generator(c.alg, m, name)).is_zero();
        run.check(ok, [&] {
            return nlohmann::json{{"kind", "phi-central"}, {"m", m}, {"z", witt_vector_str(z)}};
        });
    }
    return run.finish();
}

ScenarioReport sc_phi_compat(const ScenarioConfig& cfg) {
    Ctx c = make_ctx(cfg);
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        uint32_t m = std::max<uint32_t>(2, pick_length(cfg, i));
        if (m > cfg.n) m = cfg.n;
        if (m < 2) throw domain_error("phi-compat needs n >= 2");
        auto z = smp.witt_vector(c.z1h, m, cfg.component_degree, cfg.max_terms);
        bool f_ok = phi_map(c.alg, witt::frobenius(z), m - 1) == reduce_mod(phi_map(c.alg, z, m), m - 1);
        auto zp = smp.witt_vector(c.z1h, m - 1, cfg.component_degree, cfg.max_terms);
        bool v_ok = phi_map(c.alg, witt::verschiebung(zp), m) == v_map(phi_map(c.alg, zp, m - 1));
        run.check(f_ok && v_ok, [&] {
            return nlohmann::json{{"kind", "phi-compat"},
                                  {"m", m},
                                  {"z", witt_vector_str(z)},
                                  {"z_lower", witt_vector_str(zp)},
                                  {"frobenius_ok", f_ok},
                                  {"verschiebung_ok", v_ok}};
        });
    }
    return run.finish();
}

bool eq1_single_check(const Ctx& c, const WittVector<PolyRingHandle>& z, const Polynomial& w,
                      Polynomial* lhs_out = nullptr, Polynomial* rhs_out = nullptr) {
    uint32_t m = z.length();
    WeylElement x = phi_map(c.alg, z, m);
    WeylElement xt = lift_to(x, m + 1);
    WeylElement wt = lift_center(c.alg, m + 1, w);
    WeylElement delta = divided_commutator(xt, wt, m);
    Polynomial lhs = project_to_center(delta, c.z1);
    Polynomial rhs = eq1_rhs(z, w);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return lhs == rhs;
}

ScenarioReport sc_eq1(const ScenarioConfig& cfg) {
    Ctx c = make_ctx(cfg);
    uint32_t m = cfg.witt_length ? cfg.witt_length : 2;
    if (cfg.n < m + 1) throw domain_error("eq1 needs n >= m+1 to lift one level above phi_m");
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        auto z = smp.witt_vector(c.z1h, m, cfg.component_degree, cfg.max_terms);
        Polynomial w = smp.polynomial(c.z1, 3, cfg.max_terms);
        Polynomial lhs, rhs;
        bool ok = eq1_single_check(c, z, w, &lhs, &rhs);
        run.check(ok, [&] {
            return nlohmann::json{{"kind", "eq1"},
                                  {"m", m},
                                  {"z", witt_vector_str(z)},
                                  {"w", w.str()},
                                  {"lhs", lhs.str()},
                                  {"rhs", rhs.str()}};
        });
    }
    return run.finish();
}

ScenarioReport sc_deformation_vs_std(const ScenarioConfig& cfg) {
    Ctx c = make_ctx(cfg);
    if (cfg.n < 2) throw domain_error("deformation-vs-std-poisson needs n >= 2");
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    // orientation pin: {x^p mod p, y^p mod p} = +1
    {
        Polynomial u = Polynomial::variable(c.z1, c.z1->vars[0]);
        Polynomial v = Polynomial::variable(c.z1, c.z1->vars[1]);
        Polynomial br = deformation_bracket(c.alg, c.z1, lift_center(c.alg, 1, u),
                                            lift_center(c.alg, 1, v));
        run.check(br == Polynomial::constant(c.z1, 1),
                  nlohmann::json{{"kind", "orientation"}, {"bracket", br.str()}});
    }
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        Polynomial f = smp.polynomial(c.z1, cfg.component_degree, cfg.max_terms);
        Polynomial g = smp.polynomial(c.z1, cfg.component_degree, cfg.max_terms);
        Polynomial lhs = deformation_bracket(c.alg, c.z1, lift_center(c.alg, 1, f),
                                             lift_center(c.alg, 1, g));
        Polynomial rhs = polyring::std_poisson(f, g);
        run.check(lhs == rhs, [&] {
            return nlohmann::json{{"kind", "deformation-vs-std-poisson"},
                                  {"f", f.str()},
                                  {"g", g.str()},
                                  {"lhs", lhs.str()},
                                  {"rhs", rhs.str()}};
        });
    }
    return run.finish();
}

// --------------------------------------------------------- center spans

/// Expected reduction of Z(A_L) mod p: the monomial span of Z_1^(p^(L-1)),
/// i.e. exponents divisible by p^L, inside the degree window.
chainring::ZpnMatrix expected_center_mod_p(const Ctx& c, uint32_t level, uint32_t cap) {
    MonomialWindow win(c.alg, cap);
    uint64_t pl = 1; // p^level
    for (uint32_t i = 0; i < level; ++i) pl *= c.alg->mod.p;
    chainring::ZpnMatrix rows(chainring::PModulus(c.alg->mod.p, 1), 0, win.coords());
    for (uint32_t i = 0; i < win.coords(); ++i)
        if (win.monomials[i].divisible_by(uint32_t(pl))) {
            chainring::SparseRow r;
            r.ent.emplace_back(i, 1);
            rows.append_row(std::move(r));
        }
    return chainring::howell_form(rows);
}

ScenarioReport sc_center_structure_impl(const ScenarioConfig& cfg, uint32_t level) {
    Ctx c = make_ctx(cfg);
    Runner run(cfg, Polarity::expect_holds);
    if (level < 2 || level > cfg.n)
        throw domain_error("center structure comparison needs a level in 2..n");
    TruncatedIdealSpan cb = center_basis(c.alg, level, cfg.degree);
    chainring::ZpnMatrix reduced = chainring::howell_form(chainring::reduce_rows_mod(cb.basis, 1));
    chainring::ZpnMatrix expected = expected_center_mod_p(c, level, cfg.degree);
    bool ok = reduced == expected;
    run.check(ok, [&] {
        return nlohmann::json{{"kind", "center-structure"},
                              {"level", level},
                              {"degree", cfg.degree},
                              {"reduced_rows", reduced.rows()},
                              {"expected_rows", expected.rows()}};
    });
    return run.finish();
}

ScenarioReport sc_center_structure(const ScenarioConfig& cfg) {
    uint32_t level = cfg.witt_length ? cfg.witt_length + 1 : 2;
    return sc_center_structure_impl(cfg, level);
}

ScenarioReport sc_center_shrink(const ScenarioConfig& cfg) {
    return sc_center_structure_impl(cfg, cfg.n);
}

// ------------------------------------------------- ideals and generation

ScenarioReport sc_remark_counterexample(const ScenarioConfig& cfg) {
    Ctx c = make_ctx(cfg);
    if (cfg.n != 2) throw domain_error("remark-counterexample is pinned to n = 2");
    // the scenario asserts NON-generation, so the expected outcome is the
    // violation itself; the report still carries the witness on success
    Runner run(cfg, Polarity::expect_holds);
    const uint32_t p = cfg.p;
    // I = preimage of (m) A_1 under mod p for an ideal m of Z_1 that is not
    // generated by p-th powers; the default instance is m = (u), so the
    // generators are x^p and p*1 and the expected witness is x^p itself
    bool default_instance = cfg.ideal.empty();
    std::vector<WeylElement> gens;
    if (default_instance) {
        gens.push_back(WeylElement::monomial(c.alg, 2, ExpKey::unit(0, uint16_t(p))));
    } else {
        for (const auto& text : cfg.ideal) {
            Polynomial g = polyring::parse_polynomial(c.z1, text);
            if (g.term_count() != 1)
                throw domain_error("remark-counterexample: ideal generators must be monomials");
            gens.push_back(lift_center(c.alg, 2, g));
        }
    }
    WeylElement xp = WeylElement::monomial(c.alg, 2, ExpKey::unit(0, uint16_t(p)));
    gens.push_back(WeylElement::constant(c.alg, 2, int64_t(p)));
    CentralGenReport rep = central_generation_check(gens, 2, cfg.degree);
    bool not_generated = rep.verdict == CentralGenReport::Verdict::not_generated_within_cap;
    bool witness_is_xp = rep.witness && (!default_instance || *rep.witness == xp);
    run.check(not_generated && witness_is_xp, [&] {
        return nlohmann::json{{"kind", "remark-counterexample-missed"},
                              {"witness", rep.witness ? rep.witness->str() : "none"},
                              {"not_generated", not_generated}};
    });
    if (rep.witness)
        run.note_witness(nlohmann::json{{"kind", "non-central-ideal-witness"},
                                        {"element", rep.witness->str()}});
    // companion fact: Z(A_2) mod p agrees with Z_1^(p^(n-1)) on the window
    TruncatedIdealSpan cb = center_basis(c.alg, 2, cfg.degree);
    bool shrink_ok = chainring::howell_form(chainring::reduce_rows_mod(cb.basis, 1)) ==
                     expected_center_mod_p(c, 2, cfg.degree);
    run.check(shrink_ok, nlohmann::json{{"kind", "center-shrink-companion-failed"}});
    return run.finish();
}

ScenarioReport sc_theorem_flat_ideal(const ScenarioConfig& cfg) {
    Ctx c = make_ctx(cfg);
    if (cfg.n < 2) throw domain_error("theorem-flat-ideal needs n >= 2");
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    bool warned = false;
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        // one or two central generators from phi images of short Witt vectors
        std::vector<WeylElement> gens;
        uint32_t count = 1 + uint32_t(smp.below(2));
        for (uint32_t g = 0; g < count; ++g) {
            auto z = smp.witt_vector(c.z1h, cfg.n, 1, cfg.max_terms);
            WeylElement cg = phi_map(c.alg, z, cfg.n);
            if (!cg.is_zero()) gens.push_back(cg);
        }
        if (gens.empty()) gens.push_back(WeylElement::constant(c.alg, cfg.n, int64_t(cfg.p)));
        CentralGenReport rep = central_generation_check(gens, cfg.n, cfg.degree);
        warned = warned || rep.truncation_warning;
        run.check(rep.verdict == CentralGenReport::Verdict::generated, [&] {
            std::vector<std::string> gtexts;
            for (const auto& g : gens) gtexts.push_back(g.str());
            return nlohmann::json{{"kind", "flat-ideal-not-generated"},
                                  {"generators", gtexts},
                                  {"witness", rep.witness ? rep.witness->str() : "none"},
                                  {"truncation_warning", rep.truncation_warning}};
        });
    }
    if (run.failures() > 0 && warned)
        return run.finish_inconclusive("degree cap too small for the sampled generators");
    return run.finish();
}

// --------------------------------------------------------- prop-center

ScenarioReport sc_prop_center(const ScenarioConfig& cfg) {
    if (cfg.p != 3 || cfg.n != 2 || cfg.r != 1)
        throw domain_error("prop-center instance is pinned to p=3, n=2, r=1");
    if (cfg.degree < 29)
        throw domain_error("prop-center needs a degree cap of at least 29");
    Ctx c = make_ctx(cfg);
    Runner run(cfg, Polarity::expect_holds);
    const uint32_t p = cfg.p, cap = cfg.degree;
    const uint64_t p2 = uint64_t(p) * p;

    // R = A_2 / c A_2 with c = phi_2(tau(u^p)); then R/pR = A_1/(u^(p^2))A_1
    // and Z(R/pR) = B = Z_1/(u^(p^2)), the principal-ideal instance of the
    // proposition with m = (u).
    Polynomial up = Polynomial::variable(c.z1, c.z1->vars[0], uint16_t(p));
    WeylElement cgen = phi_map(c.alg, witt::teichmuller(c.z1h, up, 2), 2);
    TruncatedIdealSpan ideal = ideal_span_basis({cgen}, 2, cap);
    TruncatedIdealSpan zr = center_basis_mod(c.alg, 2, cap, &ideal.basis);
    MonomialWindow win(c.alg, cap);

    // phi_2(W_2(B)) is additively spanned by tau-images of the B-basis
    // monomials and V-images: lift(mu)^p and p*lift(mu)
    chainring::ZpnMatrix tau_rows(chainring::PModulus(p, 2), 0, win.coords());
    chainring::ZpnMatrix v_rows(chainring::PModulus(p, 2), 0, win.coords());
    auto z1_monos = monomials_up_to_degree(2, cap / p);
    for (const auto& mu : z1_monos) {
        if (mu.e[0] >= p2) continue; // outside the monomial basis of B
        Polynomial mup = polyring::Polynomial::monomial(c.z1, mu);
        if (uint64_t(mu.degree()) * p2 <= cap) {
            WittVector<PolyRingHandle> tz{c.z1h, {mup, Polynomial(c.z1)}};
            tau_rows.append_row(win.to_vector(phi_map(c.alg, tz, 2)));
        }
        if (uint64_t(mu.degree()) * p <= cap) {
            WittVector<PolyRingHandle> vz{c.z1h, {Polynomial(c.z1), mup}};
            v_rows.append_row(win.to_vector(phi_map(c.alg, vz, 2)));
        }
    }
    chainring::ZpnMatrix rhs = tau_rows;
    rhs.append_rows(v_rows);
    rhs.append_rows(ideal.basis);
    rhs = chainring::howell_form(rhs);
    bool center_ok = zr.basis == rhs;
    run.check(center_ok, [&] {
        return nlohmann::json{{"kind", "prop-center-image"},
                              {"center_rows", zr.basis.rows()},
                              {"phi_image_rows", rhs.rows()}};
    });

    // Z(R) cap pR = phi_2(V W_1(B)) (again relative to the ideal span)
    chainring::ZpnMatrix p_full(chainring::PModulus(p, 2), 0, win.coords());
    for (uint32_t i = 0; i < win.coords(); ++i) {
        chainring::SparseRow r;
        r.ent.emplace_back(i, p);
        p_full.append_row(std::move(r));
    }
    chainring::ZpnMatrix lhs2 =
        chainring::span_intersect(zr.basis, chainring::span_sum(p_full, ideal.basis));
    chainring::ZpnMatrix rhs2 = v_rows;
    rhs2.append_rows(ideal.basis);
    bool v_ok = chainring::span_equal(lhs2, rhs2);
    run.check(v_ok, [&] {
        return nlohmann::json{{"kind", "prop-center-v-part"}, {"lhs_rows", lhs2.rows()}};
    });
    return run.finish();
}

// ----------------------------------------------------------- lemma muh

/// Dense single-variable helpers over F_p[t]/(t^cap).
struct DensePoly {
    std::vector<uint64_t> c; // c[k] multiplies t^k

    static DensePoly zero(uint32_t cap) { return DensePoly{std::vector<uint64_t>(cap, 0)}; }
};

ScenarioReport sc_lemma_muh(const ScenarioConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 2)
        throw domain_error("lemma-muh exhaustive search supports n in {1, 2}");
    Runner run(cfg, Polarity::expect_holds);
    const uint32_t p = cfg.p, n = cfg.n;
    uint32_t cap = 1;
    for (uint32_t i = 0; i < n; ++i) cap *= p; // p^n = dimension of B over F_p

    RingPtr sring = polyring::make_ring({"t"}, chainring::PModulus(p, 1));
    MonomialIdeal mi(sring, {ExpKey::unit(0, 1)});
    MonomialIdeal mpn = ideal_power_generators(mi, cap);
    QuotientRing B(sring, mpn);

    auto to_poly = [&](const DensePoly& d) {
        Polynomial f(sring);
        for (uint32_t k = 0; k < d.c.size(); ++k)
            if (d.c[k]) f.add_term(ExpKey::unit(0, uint16_t(k)), int64_t(d.c[k]));
        return f;
    };

    uint64_t space = 1;
    for (uint32_t i = 0; i < cap; ++i) {
        if (space > 2'000'000) throw domain_error("lemma-muh: exhaustive space too large");
        space *= p;
    }

    // conclusion sets, characterized monomially (independent route used to
    // cross-check the linear-algebra decomposition checker)
    auto in_conclusion = [&](const DensePoly& z, uint32_t i) {
        // B^p + m^(p^i) B = span{t^(pk)} + span{t^e : e >= p^i}
        uint64_t pi = 1;
        for (uint32_t j = 0; j < i; ++j) pi *= p;
        for (uint32_t e = 0; e < z.c.size(); ++e)
            if (z.c[e] && e % p != 0 && e < pi) return false;
        return true;
    };

    uint64_t strict_cases = 0, truncated_cases = 0, top_index_artifacts = 0;
    nlohmann::json artifact_witness;

    for (uint64_t code = 0; code < space; ++code) {
        // decode z_1
        DensePoly z1 = DensePoly::zero(cap);
        uint64_t rest = code;
        for (uint32_t k = 0; k < cap; ++k) {
            z1.c[k] = rest % p;
            rest /= p;
        }
        if (n == 1) {
            // condition: d z_1 = 0 in B
            bool instance = true;
            for (uint32_t k = 1; k < cap && instance; ++k)
                if (z1.c[k] && k % p != 0) instance = false;
            if (!instance) continue;
            ++truncated_cases;
            bool concl = in_conclusion(z1, 1);
            auto dec = polyring::pth_power_decomposition_check(to_poly(z1), 1, mi, B);
            run.check(concl && dec.member == concl, [&] {
                return nlohmann::json{{"kind", "lemma-muh-n1"}, {"z1", to_poly(z1).str()}};
            });
            continue;
        }
        // n = 2: omega = z1^(p-1)-power sum; compute z1^(p^(n-1)-1) * z1'
        // densely over F_p[t] without truncation first
        std::vector<uint64_t> pow(1, 1); // z1^(p^{n-1}-1)
        uint32_t e = p - 1;              // p^(n-1)-1 with n=2
        for (uint32_t j = 0; j < e; ++j) {
            std::vector<uint64_t> nxt(pow.size() + cap - 1, 0);
            for (uint32_t a = 0; a < pow.size(); ++a)
                if (pow[a])
                    for (uint32_t b = 0; b < cap; ++b)
                        if (z1.c[b]) nxt[a + b] = (nxt[a + b] + pow[a] * z1.c[b]) % p;
            pow = std::move(nxt);
        }
        std::vector<uint64_t> omega(pow.size() + cap, 0); // z1^(p-1) * z1'
        for (uint32_t a = 0; a < pow.size(); ++a)
            if (pow[a])
                for (uint32_t b = 1; b < cap; ++b)
                    if (z1.c[b]) omega[a + b - 1] = (omega[a + b - 1] + pow[a] * z1.c[b] * b) % p;

        // truncated reading: need -omega mod t^cap integrable by some z2 in B
        bool integrable = true;
        for (uint32_t e2 = 0; e2 < cap && integrable; ++e2)
            if (omega[e2] && (e2 + 1) % p == 0) integrable = false;
        if (!integrable) continue; // coefficients past t^cap die in the truncation
        DensePoly z2 = DensePoly::zero(cap);
        for (uint32_t e2 = 0; e2 + 1 < cap; ++e2) {
            if (!omega[e2]) continue;
            uint64_t inv = chainring::inv_mod((e2 + 1) % p, p);
            z2.c[e2 + 1] = (p - omega[e2] % p) % p * inv % p;
        }
        ++truncated_cases;

        // i = 1 conclusion holds in the truncated reading (the strength the
        // center proposition consumes)
        bool c1 = in_conclusion(z1, 1);
        auto dec1 = polyring::pth_power_decomposition_check(to_poly(z1), 1, mi, B);
        run.check(c1 && dec1.member == c1, [&] {
            return nlohmann::json{{"kind", "lemma-muh-i1"}, {"z1", to_poly(z1).str()}};
        });

        // top index in the truncated reading: violations exist (truncation
        // artifact); count them but do not assert either way here
        if (!in_conclusion(z2, 2)) {
            ++top_index_artifacts;
            if (artifact_witness.is_null())
                artifact_witness = nlohmann::json{{"kind", "lemma-muh-top-index-artifact"},
                                                  {"z1", to_poly(z1).str()},
                                                  {"z2", to_poly(z2).str()}};
        }

        // strict reading: the identity on the nose in Omega^1 of F_p[t]
        // (no truncation); then the conclusion holds for every index
        bool strict = true;
        for (uint32_t e2 = 0; e2 < omega.size() && strict; ++e2) {
            uint64_t want = e2 + 1 < cap ? (z2.c[e2 + 1] * (e2 + 1)) % p : 0;
            if ((omega[e2] + want) % p != 0) strict = false;
        }
        if (strict) {
            ++strict_cases;
            bool ok = in_conclusion(z1, 1) && in_conclusion(z2, 2);
            auto d1 = polyring::pth_power_decomposition_check(to_poly(z1), 1, mi, B);
            auto d2 = polyring::pth_power_decomposition_check(to_poly(z2), 2, mi, B);
            run.check(ok && d1.member && d2.member, [&] {
                return nlohmann::json{{"kind", "lemma-muh-strict"},
                                      {"z1", to_poly(z1).str()},
                                      {"z2", to_poly(z2).str()}};
            });
        }
    }

    // the truncated top-index artifact is a documented fact: it must exist
    // (otherwise the strict/truncated distinction collapsed silently)
    if (n == 2) {
        run.check(top_index_artifacts > 0,
                  nlohmann::json{{"kind", "expected-top-index-artifact-missing"}});
        ScenarioReport rep = run.finish();
        rep.params["strict_cases"] = strict_cases;
        rep.params["truncated_cases"] = truncated_cases;
        rep.params["top_index_artifacts"] = top_index_artifacts;
        if (!artifact_witness.is_null() && rep.witnesses.empty())
            rep.witnesses.push_back(artifact_witness);
        return rep;
    }
    return run.finish();
}

// ------------------------------------------------------------- cartier

ScenarioReport sc_cartier(const ScenarioConfig& cfg) {
    RingPtr ring = polyring::make_ring({"u", "v"}, chainring::PModulus(cfg.p, 1));
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    const uint32_t p = cfg.p;

    // fixed-form spot values: C^{-1}(1 du) = u^(p-1) du, C^{-1}(u dv) = u^p v^(p-1) dv
    {
        Polynomial one = Polynomial::constant(ring, 1);
        Polynomial u = Polynomial::variable(ring, "u");
        Polynomial v = Polynomial::variable(ring, "v");
        OneForm a = polyring::cartier_inverse(ring, {{one, u}});
        OneForm expect_a(ring);
        expect_a.set_coefficient(0, u.pow(p - 1));
        run.check(a == expect_a, nlohmann::json{{"kind", "cartier-spot-du"}, {"got", a.str()}});
        OneForm b = polyring::cartier_inverse(ring, {{u, v}});
        OneForm expect_b(ring);
        expect_b.set_coefficient(1, u.pow(p) * v.pow(p - 1));
        run.check(b == expect_b, nlohmann::json{{"kind", "cartier-spot-udv"}, {"got", b.str()}});
    }
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        std::vector<std::pair<Polynomial, Polynomial>> pres;
        uint32_t parts = 1 + uint32_t(smp.below(2));
        for (uint32_t j = 0; j < parts; ++j)
            pres.emplace_back(smp.polynomial(ring, 3, cfg.max_terms),
                              smp.polynomial(ring, 3, cfg.max_terms));
        OneForm w = polyring::cartier_inverse(ring, pres);
        bool closed = polyring::one_form_is_closed(w);
        // cross-check against the Witt-coordinate composite: for (f, 0) the
        // composite equals f^(p-1) df = C^{-1}(df)
        Polynomial f = smp.polynomial(ring, 3, cfg.max_terms);
        OneForm via_fd = polyring::fd_composite({f, Polynomial(ring)}, 2);
        OneForm via_cartier =
            polyring::cartier_inverse(ring, {{Polynomial::constant(ring, 1), f}});
        bool agree = via_fd == via_cartier;
        run.check(closed && agree, [&] {
            return nlohmann::json{{"kind", "cartier"},
                                  {"closed", closed},
                                  {"fd_agrees", agree},
                                  {"f", f.str()}};
        });
    }
    return run.finish();
}

// ---------------------------------------------------------- lemma frob

ScenarioReport sc_lemma_frob(const ScenarioConfig& cfg) {
    RingPtr sring = polyring::make_ring({"u", "v"}, chainring::PModulus(cfg.p, 1));
    auto shandle = std::make_shared<PolyRingHandle>(sring);
    Sampler smp(cfg.seed);
    Runner run(cfg, Polarity::expect_holds);
    const uint32_t p = cfg.p;
    const uint32_t window = cfg.degree; // degree window for ideal comparisons
    const uint32_t n = 2;               // W_2(S) instances

    auto monos = monomials_up_to_degree(2, window);
    std::map<ExpKey, uint32_t, GradedLexDesc> mono_index;
    for (uint32_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);
    // span of a monomial ideal inside the window
    auto ideal_window_span = [&](const std::vector<ExpKey>& gens) {
        chainring::ZpnMatrix rows(chainring::PModulus(p, 1), 0, uint32_t(monos.size()));
        for (const auto& g : gens)
            for (const auto& m : monos) {
                if (g.degree() + m.degree() > window) continue;
                chainring::SparseRow r;
                r.ent.emplace_back(mono_index.at(g.plus(m)), 1);
                rows.append_row(std::move(r));
            }
        return chainring::howell_form(rows);
    };

    auto hypothesis_holds = [&](const std::vector<std::array<Polynomial, 2>>& gens,
                                const std::vector<ExpKey>& fm_gens) {
        // F^(n-1)(d h_j) must have all coefficients in the ideal (F(m)) S;
        // by F-multiplicativity this suffices on ideal generators.
        MonomialIdeal fm(sring, fm_gens);
        for (const auto& h : gens) {
            OneForm fd = polyring::fd_composite({h[0], h[1]}, n);
            for (const auto& [slot, coeff] : fd.coefficients())
                if (!fm.normal_form(coeff).is_zero()) return false;
        }
        return true;
    };
    auto conclusion_holds = [&](const std::vector<ExpKey>& mbar_gens) {
        // mbar = (mbar cap S^p) S within the degree window.  mbar is a
        // monomial ideal here, so the intersection with S^p is the span of
        // its monomials with exponents divisible by p.
        chainring::ZpnMatrix mbar = ideal_window_span(mbar_gens);
        // monomials of mbar with p-divisible exponents, regenerated as an ideal
        MonomialIdeal mi(sring, mbar_gens);
        std::vector<ExpKey> pgens;
        for (const auto& m : monos)
            if (mi.contains_monomial(m) && m.divisible_by(p)) pgens.push_back(m);
        chainring::ZpnMatrix regen = pgens.empty()
                                         ? chainring::ZpnMatrix(chainring::PModulus(p, 1), 0,
                                                                uint32_t(monos.size()))
                                         : ideal_window_span(pgens);
        // compare away from the window boundary (regeneration loses degree)
        uint32_t w = window > p ? window - p : 0;
        uint32_t wfirst = 0;
        while (wfirst < monos.size() && monos[wfirst].degree() > w) ++wfirst;
        return chainring::span_suffix(mbar, wfirst) == chainring::span_suffix(regen, wfirst);
    };

    for (uint64_t i = 0; i < cfg.samples; ++i) {
        // constructed to satisfy the hypothesis: h = (c mu)^p in the first
        // slot and noise g mu^(p^2) + s^p in the second
        uint32_t count = 1 + uint32_t(smp.below(2));
        std::vector<std::array<Polynomial, 2>> gens;
        std::vector<ExpKey> mbar_gens, fm_gens;
        for (uint32_t j = 0; j < count; ++j) {
            auto mus = monomials_up_to_degree(2, 2);
            ExpKey mu = mus[smp.below(mus.size() - 1)]; // skip the last (constant) monomial
            uint64_t cmu = 1 + smp.below(p - 1);
            Polynomial first =
                Polynomial::monomial(sring, mu.scaled(p), int64_t(chainring::mul_mod(1, cmu, p)));
            Polynomial g = smp.polynomial(sring, 2, cfg.max_terms);
            Polynomial s = smp.polynomial(sring, 2, cfg.max_terms);
            Polynomial second =
                g * Polynomial::monomial(sring, mu.scaled(p * p)) + s.pth_power(1);
            gens.push_back({first, second});
            mbar_gens.push_back(mu.scaled(p));
            fm_gens.push_back(mu.scaled(p * p));
        }
        bool hyp = hypothesis_holds(gens, fm_gens);
        bool concl = conclusion_holds(mbar_gens);
        run.check(hyp && concl, [&] {
            return nlohmann::json{{"kind", "lemma-frob-positive"},
                                  {"hypothesis", hyp},
                                  {"conclusion", concl}};
        });
    }
    // negative control: m = (tau(u)) fails the hypothesis and the conclusion
    {
        Polynomial u = Polynomial::variable(sring, "u");
        bool hyp = hypothesis_holds({{u, Polynomial(sring)}}, {ExpKey::unit(0, uint16_t(p))});
        bool concl = conclusion_holds({ExpKey::unit(0, 1)});
        run.check(!hyp && !concl, [&] {
            return nlohmann::json{{"kind", "lemma-frob-negative-control"},
                                  {"hypothesis", hyp},
                                  {"conclusion", concl}};
        });
    }
    return run.finish();
}

// --------------------------------------------------------------- registry

ScenarioConfig defaults_for(const std::string& name) {
    ScenarioConfig d;
    d.scenario = name;
    if (name == "phi-ring-hom" || name == "phi-central" || name == "phi-compat") {
        d.n = 3;
        d.samples = 100;
        d.component_degree = 2;
    } else if (name == "eq1") {
        d.n = 3;
        d.witt_length = 2;
        d.samples = 50;
    } else if (name == "center-structure") {
        d.n = 2;
        d.degree = 9;
        d.witt_length = 1;
    } else if (name == "center-shrink") {
        d.n = 2;
        d.degree = 12;
    } else if (name == "prop-center") {
        d.n = 2;
        d.degree = 30;
    } else if (name == "lemma-muh") {
        d.n = 2;
    } else if (name == "cartier") {
        d.samples = 50;
    } else if (name == "lemma-frob") {
        d.samples = 10;
        d.degree = 16;
    } else if (name == "remark-counterexample") {
        d.n = 2;
        d.degree = 12;
    } else if (name == "theorem-flat-ideal") {
        d.n = 2;
        d.degree = 12;
        d.samples = 20;
    } else if (name == "deformation-vs-std-poisson") {
        d.n = 2;
        d.samples = 50;
    }
    return d;
}

std::vector<ScenarioInfo> build_registry() {
    auto entry = [](const std::string& name, const std::string& statement, Polarity pol,
                    ScenarioReport (*fn)(const ScenarioConfig&)) {
        return ScenarioInfo{name, statement, pol, defaults_for(name), fn};
    };
    return {
        entry("phi-ring-hom",
              "the center map phi_m(z) = sum p^(i-1) lift(z_i)^(p^(m-i)) is a ring "
              "homomorphism W_m(Z_1) -> Z(A_m)",
              Polarity::expect_holds, sc_phi_ring_hom),
        entry("phi-central", "phi_m lands in the center: [phi_m(z), x] = [phi_m(z), y] = 0 in A_m",
              Polarity::expect_holds, sc_phi_central),
        entry("phi-compat", "phi_(m-1) F = r phi_m and phi_m V = v phi_(m-1)",
              Polarity::expect_holds, sc_phi_compat),
        entry("eq1",
              "(1/p^m)[lift phi_m(z), lift w] mod p = sum z_i^(p^(m-i)-1) {z_i, w} on Z_1",
              Polarity::expect_holds, sc_eq1),
        entry("center-structure", "Z_1^(p^m) = Z_(m+1) mod p as degree-capped spans",
              Polarity::expect_holds, sc_center_structure),
        entry("prop-center",
              "Z(R) = phi_n(W_n(B)) and Z(R) cap pR = phi_n(V W_(n-1)(B)) for the "
              "constructed flat quotient R = A_2/phi_2(tau(u^p))A_2 with B = Z_1/(u^(p^2))",
              Polarity::expect_holds, sc_prop_center),
        entry("lemma-muh",
              "sum z_i^(p^(n-i)-1) dz_i = 0 forces z_i in B^p + m^(p^i) B (exhaustive "
              "single-variable search; strict reading for the top index)",
              Polarity::expect_holds, sc_lemma_muh),
        entry("cartier", "C^(-1)(f dg) = f^p g^(p-1) dg lands in closed 1-forms",
              Polarity::expect_holds, sc_cartier),
        entry("lemma-frob",
              "F^(n-1)(dm) in F^(n-1)(m) Omega^1 forces m mod V W_(n-1)(S) = (mbar cap S^p) S",
              Polarity::expect_holds, sc_lemma_frob),
        entry("remark-counterexample",
              "the non-flat preimage of (x^p) A_1 is not centrally generated: I != (I cap "
              "Z(A)) A, witnessed by x^p",
              Polarity::expect_violation, sc_remark_counterexample),
        entry("theorem-flat-ideal",
              "centrally generated flat ideals satisfy I = (Z(A) cap I) A within the cap",
              Polarity::expect_holds, sc_theorem_flat_ideal),
        entry("center-shrink", "Z(A) mod p = Z_1^(p^(n-1)) as degree-capped spans",
              Polarity::expect_holds, sc_center_shrink),
        entry("deformation-vs-std-poisson",
              "the deformation bracket (1/p)[a~, b~] mod p agrees with the symplectic "
              "bracket under u = x^p, v = y^p, oriented by {u, v} = +1",
              Polarity::expect_holds, sc_deformation_vs_std),
    };
}

} // namespace

void ScenarioConfig::validate() const {
    if (!chainring::is_odd_prime(p) || p > 7)
        throw domain_error("ScenarioConfig: p must be an odd prime <= 7");
    if (n < 1 || n > 4) throw domain_error("ScenarioConfig: n must be in 1..4");
    if (r < 1 || r > 4) throw domain_error("ScenarioConfig: r must be in 1..4");
    if (degree > 60) throw domain_error("ScenarioConfig: degree caps are limited to 60");
    if (samples < 1 || samples > 100000) throw domain_error("ScenarioConfig: bad sample count");
    if (witt_length > n) throw domain_error("ScenarioConfig: witt_length exceeds n");
    if (weyl_sign != 1 && weyl_sign != -1) throw domain_error("ScenarioConfig: bad weyl_sign");
    if (pairing_sign != 1 && pairing_sign != -1)
        throw domain_error("ScenarioConfig: bad pairing_sign");
}

nlohmann::json ScenarioConfig::to_json() const {
    nlohmann::json j{{"scenario", scenario},
                     {"p", p},
                     {"n", n},
                     {"r", r},
                     {"degree", degree},
                     {"witt_length", witt_length},
                     {"seed", seed},
                     {"samples", samples},
                     {"component_degree", component_degree},
                     {"max_terms", max_terms},
                     {"weyl_sign", weyl_sign},
                     {"pairing_sign", pairing_sign}};
    if (!ideal.empty()) j["ideal"] = ideal;
    return j;
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& j) {
    ScenarioConfig c;
    c.scenario = j.value("scenario", c.scenario);
    c.p = j.value("p", c.p);
    c.n = j.value("n", c.n);
    c.r = j.value("r", c.r);
    c.degree = j.value("degree", c.degree);
    c.witt_length = j.value("witt_length", c.witt_length);
    c.seed = j.value("seed", c.seed);
    c.samples = j.value("samples", c.samples);
    c.component_degree = j.value("component_degree", c.component_degree);
    c.max_terms = j.value("max_terms", c.max_terms);
    c.weyl_sign = j.value("weyl_sign", c.weyl_sign);
    c.pairing_sign = j.value("pairing_sign", c.pairing_sign);
    c.ideal = j.value("ideal", c.ideal);
    return c;
}

const std::vector<ScenarioInfo>& scenario_registry() {
    static const std::vector<ScenarioInfo> reg = build_registry();
    return reg;
}

const ScenarioInfo& find_scenario(const std::string& name) {
    for (const auto& info : scenario_registry())
        if (info.name == name) return info;
    throw domain_error("unknown scenario: " + name);
}

ScenarioReport run_scenario(const ScenarioConfig& cfg) {
    const ScenarioInfo& info = find_scenario(cfg.scenario);
    cfg.validate();
    return info.run(cfg);
}

SuiteReport run_suite(const std::string& profile, Mutation mutation,
                      const std::vector<std::string>& only) {
    if (profile != "quick" && profile != "full")
        throw domain_error("run_suite: profile must be quick or full");
    std::vector<ScenarioConfig> configs;
    for (const auto& info : scenario_registry()) {
        if (!only.empty() && std::find(only.begin(), only.end(), info.name) == only.end())
            continue;
        ScenarioConfig cfg = info.defaults;
        if (profile == "quick") {
            cfg.samples = std::min<uint32_t>(cfg.samples, 25);
            if (cfg.scenario == "theorem-flat-ideal") cfg.samples = 6;
            if (cfg.scenario == "lemma-frob") cfg.samples = 5;
        }
        configs.push_back(cfg);
        if (profile == "full") {
            // second pass at p = 5 where the guards allow it
            if (info.name == "phi-ring-hom" || info.name == "phi-central" ||
                info.name == "phi-compat") {
                ScenarioConfig c5 = cfg;
                c5.p = 5;
                c5.n = 2;
                c5.witt_length = 2;
                c5.component_degree = 1;
                c5.samples = 20;
                configs.push_back(c5);
            } else if (info.name == "center-structure") {
                ScenarioConfig c5 = cfg;
                c5.p = 5;
                c5.degree = 25;
                configs.push_back(c5);
                ScenarioConfig c33 = cfg;
                c33.n = 3;
                c33.witt_length = 2;
                c33.degree = 27;
                configs.push_back(c33);
            } else if (info.name == "cartier" || info.name == "lemma-frob") {
                ScenarioConfig c5 = cfg;
                c5.p = 5;
                c5.samples = std::max<uint32_t>(5, cfg.samples / 2);
                if (info.name == "lemma-frob") c5.degree = 30;
                configs.push_back(c5);
            } else if (info.name == "eq1") {
                ScenarioConfig c5 = cfg;
                c5.p = 5;
                c5.samples = 10;
                c5.component_degree = 1;
                configs.push_back(c5);
            }
        }
    }
    if (configs.empty()) throw domain_error("run_suite: empty scenario list");
    if (mutation == Mutation::flip_weyl_sign)
        for (auto& c : configs) c.weyl_sign = -1;
    if (mutation == Mutation::flip_pairing_sign)
        for (auto& c : configs) c.pairing_sign = -1;

    SuiteReport suite;
    suite.profile = profile;
    for (const auto& cfg : configs) suite.scenarios.push_back(run_scenario(cfg));
    std::stable_sort(suite.scenarios.begin(), suite.scenarios.end(),
                     [](const ScenarioReport& a, const ScenarioReport& b) {
                         return a.scenario < b.scenario;
                     });
    return suite;
}

bool replay_witness(const ScenarioConfig& cfg, const nlohmann::json& witness) {
    const std::string kind = witness.value("kind", "");
    Ctx c = make_ctx(cfg);
    if (kind == "eq1") {
        auto z = parse_witt_vector(c.z1h, witness.at("z").get<std::string>());
        Polynomial w = polyring::parse_polynomial(c.z1, witness.at("w").get<std::string>());
        return !eq1_single_check(c, z, w);
    }
    if (kind == "deformation-vs-std-poisson") {
        Polynomial f = polyring::parse_polynomial(c.z1, witness.at("f").get<std::string>());
        Polynomial g = polyring::parse_polynomial(c.z1, witness.at("g").get<std::string>());
        Polynomial lhs = deformation_bracket(c.alg, c.z1, lift_center(c.alg, 1, f),
                                             lift_center(c.alg, 1, g));
        return !(lhs == polyring::std_poisson(f, g));
    }
    if (kind == "phi-ring-hom") {
        auto z = parse_witt_vector(c.z1h, witness.at("z").get<std::string>());
        auto w = parse_witt_vector(c.z1h, witness.at("w").get<std::string>());
        uint32_t m = witness.at("m").get<uint32_t>();
        WeylElement pz = phi_map(c.alg, z, m), pw = phi_map(c.alg, w, m);
        bool add_ok = (pz + pw) == phi_map(c.alg, witt_add(z, w), m);
        bool mul_ok = (pz * pw) == phi_map(c.alg, witt_mul(z, w), m);
        return !(add_ok && mul_ok);
    }
    if (kind == "phi-central") {
        auto z = parse_witt_vector(c.z1h, witness.at("z").get<std::string>());
        uint32_t m = witness.at("m").get<uint32_t>();
        WeylElement pz = phi_map(c.alg, z, m);
        for (const auto& name : c.alg->var_names)
            if (!commutator(pz, WeylElement::generator(c.alg, m, name)).is_zero()) return true;
        return false;
    }
    throw domain_error("replay_witness: unsupported witness kind " + kind);
}

} // namespace wittquant::harness
