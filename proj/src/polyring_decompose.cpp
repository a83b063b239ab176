#include "wittquant/polyring/decompose.hpp"

#include "wittquant/chainring/matrix.hpp"

namespace wittquant::polyring {

PthPowerDecomposition pth_power_decomposition_check(const Polynomial& z, uint32_t i,
                                                    const MonomialIdeal& m,
                                                    const QuotientRing& B,
                                                    std::optional<uint32_t> degree_cap) {
    const auto& ring = B.base;
    if (!ring->is_char_p())
        throw domain_error("pth_power_decomposition_check: requires an F_p coefficient ring");
    const uint32_t p = ring->mod.p;

    std::vector<ExpKey> basis = B.basis_monomials(degree_cap);
    std::map<ExpKey, uint32_t, GradedLexDesc> index;
    for (uint32_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);

    Polynomial znf = B.nf(z);
    for (const auto& [k, c] : znf.terms())
        if (!index.count(k))
            throw domain_error("pth_power_decomposition_check: z outside the basis window");

    // Subspace generators are single monomials: mu^p for basis monomials mu,
    // and nu*mu for generators nu of m^(p^i).
    chainring::PModulus fp(p, 1);
    chainring::ZpnMatrix rows(fp, 0, uint32_t(basis.size()));
    uint64_t pi = 1;
    for (uint32_t j = 0; j < i; ++j) pi *= p;
    MonomialIdeal mpi = ideal_power_generators(m, uint32_t(pi));
    for (const auto& mu : basis) {
        ExpKey mp = mu.scaled(p);
        auto it = index.find(mp);
        if (it == index.end()) continue; // in the ideal or past the cap
        chainring::SparseRow r;
        r.ent.emplace_back(it->second, 1);
        rows.append_row(std::move(r));
    }
    for (const auto& nu : mpi.generators())
        for (const auto& mu : basis) {
            auto it = index.find(nu.plus(mu));
            if (it == index.end()) continue;
            chainring::SparseRow r;
            r.ent.emplace_back(it->second, 1);
            rows.append_row(std::move(r));
        }

    chainring::SparseRow zvec;
    for (const auto& [k, c] : znf.terms()) zvec.ent.emplace_back(index.at(k), c);
    std::sort(zvec.ent.begin(), zvec.ent.end());

    auto mem = chainring::in_row_span(rows, zvec);
    PthPowerDecomposition out;
    out.root = Polynomial(ring);
    out.remainder = Polynomial(ring);
    if (!mem.member) return out;
    out.member = true;
    // The subspace is spanned by single monomials, so membership splits
    // per monomial of z; build the canonical certificate with the p-th
    // power route preferred (c^p = c in F_p makes the root coefficients
    // literal).  Any disagreement with the span decision is a bug.
    for (const auto& [k, c] : znf.terms()) {
        ExpKey root = k.divisible_by(p) ? k.divided_exponents(p) : ExpKey{};
        if (k.divisible_by(p) && index.count(k) && !B.modulus_ideal.contains_monomial(root))
            out.root.add_term(root, int64_t(c));
        else if (mpi.contains_monomial(k))
            out.remainder.add_term(k, int64_t(c));
        else
            throw internal_error(
                "pth_power_decomposition_check: span decision and monomial split disagree");
    }
    if (!(B.nf(out.root.pth_power(1) + out.remainder) == znf))
        throw internal_error("pth_power_decomposition_check: certificate fails to reassemble");
    return out;
}

} // namespace wittquant::polyring
