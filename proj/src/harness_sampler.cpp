#include "wittquant/harness/sampler.hpp"

namespace wittquant::harness {

uint64_t Sampler::below(uint64_t n) {
    if (n == 0) throw domain_error("Sampler::below(0)");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % n;
}

polyring::Polynomial Sampler::polynomial(const polyring::RingPtr& ring, uint32_t max_degree,
                                         uint32_t max_terms) {
    auto monos = monomials_up_to_degree(ring->nvars(), max_degree);
    polyring::Polynomial f(ring);
    uint32_t t = 1 + uint32_t(below(max_terms));
    for (uint32_t i = 0; i < t; ++i) {
        const ExpKey& k = monos[below(monos.size())];
        uint64_t c = 1 + below(ring->mod.pn - 1);
        f.add_term(k, int64_t(c));
    }
    return f;
}

witt::WittVector<polyring::PolyRingHandle>
Sampler::witt_vector(std::shared_ptr<const polyring::PolyRingHandle> handle, uint32_t length,
                     uint32_t max_degree, uint32_t max_terms) {
    witt::WittVector<polyring::PolyRingHandle> z{handle, {}};
    for (uint32_t i = 0; i < length; ++i)
        z.comps.push_back(handle->reduce(polynomial(handle->desc, max_degree, max_terms)));
    return z;
}

} // namespace wittquant::harness
