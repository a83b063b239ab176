#include "wittquant/polyring/ideal.hpp"

#include <algorithm>
#include <set>

namespace wittquant::polyring {

namespace {

std::vector<ExpKey> minimalize(std::vector<ExpKey> gens) {
    std::sort(gens.begin(), gens.end(), GradedLexDesc{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExpKey> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (!(h == g) && h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<ExpKey> generators)
    : ring_(std::move(ring)), gens_(minimalize(std::move(generators))) {
    for (const auto& g : gens_)
        for (std::size_t i = ring_->nvars(); i < ExpKey::capacity; ++i)
            if (g.e[i] != 0) throw domain_error("MonomialIdeal: generator outside the ring");
}

MonomialIdeal MonomialIdeal::from_strings(RingPtr ring, const std::vector<std::string>& monomials) {
    std::vector<ExpKey> gens;
    for (const auto& s : monomials) {
        Polynomial p = parse_polynomial(ring, s);
        if (p.term_count() != 1 || p.terms().begin()->second != 1)
            throw domain_error("MonomialIdeal: generators must be pure monomials");
        gens.push_back(p.terms().begin()->first);
    }
    return MonomialIdeal(ring, std::move(gens));
}

bool MonomialIdeal::contains_monomial(const ExpKey& k) const {
    for (const auto& g : gens_)
        if (g.divides(k)) return true;
    return false;
}

Polynomial MonomialIdeal::normal_form(const Polynomial& f) const {
    if (gens_.empty()) return f;
    Polynomial out(f.ring());
    for (const auto& [k, c] : f.terms())
        if (!contains_monomial(k)) out.add_term(k, int64_t(c));
    return out;
}

MonomialIdeal ideal_power_generators(const MonomialIdeal& m, uint32_t e) {
    if (e < 1) throw domain_error("ideal_power_generators: exponent must be >= 1");
    if (m.is_zero()) return m;
    // all degree-e products of generators, then minimalize
    std::set<ExpKey, GradedLexDesc> products;
    std::vector<ExpKey> cur{ExpKey{}};
    for (uint32_t step = 0; step < e; ++step) {
        std::set<ExpKey, GradedLexDesc> next;
        for (const auto& base : cur)
            for (const auto& g : m.generators()) next.insert(base.plus(g));
        cur.assign(next.begin(), next.end());
    }
    return MonomialIdeal(m.ring(), cur);
}

bool QuotientRing::is_zero_dimensional() const {
    for (std::size_t v = 0; v < base->nvars(); ++v) {
        bool pure = false;
        for (const auto& g : modulus_ideal.generators()) {
            bool only_v = g.e[v] > 0;
            for (std::size_t w = 0; only_v && w < base->nvars(); ++w)
                if (w != v && g.e[w] != 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

std::vector<ExpKey> QuotientRing::basis_monomials(std::optional<uint32_t> degree_cap) const {
    uint32_t cap;
    if (degree_cap) {
        cap = *degree_cap;
    } else {
        if (!is_zero_dimensional())
            throw domain_error("QuotientRing: no finite monomial basis and no degree cap supplied");
        // pure powers bound every exponent, so total degree is bounded too
        uint32_t bound = 0;
        for (std::size_t v = 0; v < base->nvars(); ++v) {
            uint32_t best = 0xffff;
            for (const auto& g : modulus_ideal.generators())
                if (g.e[v] > 0 && g.degree() == g.e[v]) best = std::min<uint32_t>(best, g.e[v]);
            bound += best - 1;
        }
        cap = bound;
    }
    std::vector<ExpKey> out;
    for (const auto& k : monomials_up_to_degree(base->nvars(), cap))
        if (!modulus_ideal.contains_monomial(k)) out.push_back(k);
    return out;
}

} // namespace wittquant::polyring
