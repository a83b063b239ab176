#include "wittquant/polyring/poisson.hpp"

namespace wittquant::polyring {

namespace {

const PolyRingDesc& require_symplectic(const RingPtr& ring) {
    if (!ring || !ring->symplectic)
        throw domain_error("no symplectic pairing configured on this ring");
    return *ring;
}

} // namespace

Polynomial std_poisson(const Polynomial& f, const Polynomial& g) {
    const auto& ring = require_symplectic(f.ring());
    Polynomial out(f.ring());
    for (std::size_t pair = 0; 2 * pair + 1 < ring.nvars(); ++pair) {
        std::size_t u = 2 * pair, v = 2 * pair + 1;
        out = out + f.derivative(u) * g.derivative(v) - f.derivative(v) * g.derivative(u);
    }
    return ring.pairing_sign == 1 ? out : -out;
}

Derivation::Derivation(RingPtr r) : ring(std::move(r)) {
    values.assign(ring->nvars(), Polynomial(ring));
}

Polynomial Derivation::apply(const Polynomial& f) const {
    Polynomial out(ring);
    for (std::size_t v = 0; v < ring->nvars(); ++v) out = out + values[v] * f.derivative(v);
    return out;
}

Derivation iota(const OneForm& w) {
    const auto& ring = require_symplectic(w.ring());
    // With {u,v} = s:  {u,-} = s d/dv and {v,-} = -s d/du, so
    // a du + b dv maps to the derivation with D(u) = -s b, D(v) = s a.
    Derivation d(w.ring());
    const int64_t s = ring.pairing_sign;
    for (std::size_t pair = 0; 2 * pair + 1 < ring.nvars(); ++pair) {
        std::size_t u = 2 * pair, v = 2 * pair + 1;
        d.values[u] = w.coefficient(v).scaled(-s);
        d.values[v] = w.coefficient(u).scaled(s);
    }
    return d;
}

OneForm iota_inverse(const Derivation& d) {
    const auto& ring = require_symplectic(d.ring);
    OneForm w(d.ring);
    const int64_t s = ring.pairing_sign;
    for (std::size_t pair = 0; 2 * pair + 1 < ring.nvars(); ++pair) {
        std::size_t u = 2 * pair, v = 2 * pair + 1;
        w.set_coefficient(u, d.values[v].scaled(s));
        w.set_coefficient(v, d.values[u].scaled(-s));
    }
    return w;
}

} // namespace wittquant::polyring
