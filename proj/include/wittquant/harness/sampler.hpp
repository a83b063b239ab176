#pragma once

#include <random>

#include "wittquant/polyring/handle.hpp"
#include "wittquant/witt/witt_vector.hpp"

namespace wittquant::harness {

/// Seeded element sampler behind every probabilistic scenario.  The
/// distributions are fixed so reports replay byte-identically:
///  - polynomials draw 1..max_terms monomials uniformly from the set of
///    monomials of degree <= max_degree, with coefficients uniform on
///    the nonzero residues (merging may cancel terms);
///  - Witt vectors sample each component independently.
/// mt19937_64 plus rejection sampling keeps draws platform-independent.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : eng_(seed) {}

    uint64_t below(uint64_t n);

    polyring::Polynomial polynomial(const polyring::RingPtr& ring, uint32_t max_degree,
                                    uint32_t max_terms);

    witt::WittVector<polyring::PolyRingHandle>
    witt_vector(std::shared_ptr<const polyring::PolyRingHandle> handle, uint32_t length,
                uint32_t max_degree, uint32_t max_terms);

private:
    std::mt19937_64 eng_;
};

} // namespace wittquant::harness
