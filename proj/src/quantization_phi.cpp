#include "wittquant/quantization/phi.hpp"

namespace wittquant::quantization {

RingPtr center_ring(const AlgebraPtr& alg, int pairing_sign) {
    std::vector<std::string> names;
    if (alg->pairs == 1) {
        names = {"u", "v"};
    } else {
        for (uint32_t i = 1; i <= alg->pairs; ++i) {
            names.push_back("u" + std::to_string(i));
            names.push_back("v" + std::to_string(i));
        }
    }
    return polyring::make_symplectic_ring(std::move(names), PModulus(alg->mod.p, 1), pairing_sign);
}

namespace {

void require_z1_shape(const AlgebraPtr& alg, const RingPtr& ring) {
    if (!ring->is_char_p() || ring->mod.p != alg->mod.p || ring->nvars() != alg->nvars())
        throw domain_error("expected a Z_1 coordinate ring matching the algebra");
}

} // namespace

WeylElement lift_center(const AlgebraPtr& alg, uint32_t level, const Polynomial& f) {
    require_z1_shape(alg, f.ring());
    WeylElement out(alg, level);
    for (const auto& [k, c] : f.terms()) out.add_term(k.scaled(alg->mod.p), int64_t(c));
    return out;
}

Polynomial project_to_center(const WeylElement& e, const RingPtr& z1) {
    require_z1_shape(e.algebra(), z1);
    if (e.level() != 1) throw domain_error("project_to_center: element must live at level 1");
    Polynomial out(z1);
    const uint32_t p = e.algebra()->mod.p;
    for (const auto& [k, c] : e.terms()) {
        if (!k.divisible_by(p))
            throw domain_error("project_to_center: element is not in F_p[x^p, y^p]");
        out.add_term(k.divided_exponents(p), int64_t(c));
    }
    return out;
}

bool is_central_mod_p(const WeylElement& e) {
    if (e.level() != 1) return false;
    const uint32_t p = e.algebra()->mod.p;
    for (const auto& [k, c] : e.terms())
        if (!k.divisible_by(p)) return false;
    return true;
}

WeylElement phi_map(const AlgebraPtr& alg, const witt::WittVector<PolyRingHandle>& z, uint32_t m) {
    if (m < 1 || m > alg->mod.n) throw domain_error("phi_map: level m out of range");
    if (z.length() != m) throw domain_error("phi_map: Witt length must equal the level");
    const uint32_t p = alg->mod.p;
    WeylElement out(alg, m);
    uint64_t pi = 1; // p^(i-1)
    for (uint32_t i = 1; i <= m; ++i) {
        uint64_t exp = 1;
        for (uint32_t j = i; j < m; ++j) exp *= p; // p^(m-i)
        WeylElement lifted = lift_center(alg, m, z.component(i));
        out = out + lifted.pow(exp).scaled(int64_t(pi));
        pi *= p;
    }
    // the image lies in Z(A_m); a failure here is a library bug
    for (const auto& name : alg->var_names) {
        WeylElement g = WeylElement::generator(alg, m, name);
        if (!commutator(out, g).is_zero())
            throw internal_error("phi_map: image fails to be central in A_m");
    }
    return out;
}

Polynomial deformation_bracket(const AlgebraPtr& alg, const RingPtr& z1, const WeylElement& a,
                               const WeylElement& b) {
    if (alg->mod.n < 2) throw domain_error("deformation_bracket: needs algebra level n >= 2");
    if (a.level() != 1 || b.level() != 1)
        throw domain_error("deformation_bracket: arguments must live at level 1");
    if (!is_central_mod_p(a) || !is_central_mod_p(b))
        throw domain_error("deformation_bracket: argument not central in A_1");
    WeylElement c = divided_commutator(lift_to(a, 2), lift_to(b, 2), 1);
    return project_to_center(c, z1);
}

Polynomial eq1_rhs(const witt::WittVector<PolyRingHandle>& z, const Polynomial& w) {
    if (z.length() == 0) throw domain_error("eq1_rhs: empty Witt vector");
    const auto& ring = w.ring();
    const uint32_t p = ring->mod.p;
    const uint32_t m = z.length();
    Polynomial out(ring);
    for (uint32_t i = 1; i <= m; ++i) {
        uint64_t exp = 1;
        for (uint32_t j = i; j < m; ++j) exp *= p; // p^(m-i)
        out = out + z.component(i).pow(exp - 1) * polyring::std_poisson(z.component(i), w);
    }
    return out;
}

} // namespace wittquant::quantization
