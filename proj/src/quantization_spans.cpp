#include "wittquant/quantization/spans.hpp"

#include <algorithm>
#include <set>

namespace wittquant::quantization {

using chainring::SparseRow;

MonomialWindow::MonomialWindow(AlgebraPtr alg, uint32_t cap)
    : algebra(std::move(alg)), degree_cap(cap),
      monomials(monomials_up_to_degree(algebra->nvars(), cap)) {
    for (uint32_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
}

uint32_t MonomialWindow::first_col_of_window(uint32_t w) const {
    // monomials are degree-descending; find the first index with degree <= w
    uint32_t lo = 0, hi = coords();
    while (lo < hi) {
        uint32_t mid = (lo + hi) / 2;
        if (monomials[mid].degree() <= w) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

SparseRow MonomialWindow::to_vector(const WeylElement& e) const {
    SparseRow row;
    row.ent.reserve(e.term_count());
    for (const auto& [k, c] : e.terms()) {
        auto it = index.find(k);
        if (it == index.end())
            throw domain_error("MonomialWindow: element exceeds the degree cap");
        row.ent.emplace_back(it->second, c);
    }
    std::sort(row.ent.begin(), row.ent.end());
    return row;
}

WeylElement MonomialWindow::to_element(const SparseRow& row, uint32_t level) const {
    WeylElement e(algebra, level);
    for (const auto& [col, c] : row.ent) e.add_term(monomials[col], int64_t(c));
    return e;
}

namespace {

/// Coordinates of [mu, gen] over a target monomial list, for a single
/// basis monomial mu.  With [y_i, x_i] = s:
///   [mu, x_i] =  s * b_i * mu / y_i,   [mu, y_i] = -s * a_i * mu / x_i.
struct AdImage {
    ExpKey key;
    int64_t coeff; // signed small integer, reduced by the caller
    bool nonzero;
};

AdImage ad_image(const QuantAlgebraDesc& alg, const ExpKey& mu, uint32_t pair, bool with_x) {
    AdImage out{ExpKey{}, 0, false};
    std::size_t slot = with_x ? alg.y_slot(pair) : alg.x_slot(pair);
    uint16_t e = mu.e[slot];
    if (e == 0) return out;
    out.key = mu;
    out.key.e[slot] = uint16_t(e - 1);
    out.coeff = int64_t(e) * (with_x ? alg.weyl_sign : -alg.weyl_sign);
    out.nonzero = true;
    return out;
}

} // namespace

TruncatedIdealSpan center_basis(const AlgebraPtr& alg, uint32_t level, uint32_t degree_cap) {
    if (level < 1 || level > alg->mod.n) throw domain_error("center_basis: level out of range");
    const PModulus mod(alg->mod.p, level);
    MonomialWindow win(alg, degree_cap);
    const uint32_t ops = uint32_t(alg->nvars());

    ZpnMatrix rows(mod, 0, win.coords());
    // ad is graded of degree -1: solve one homogeneous slab at a time
    for (uint32_t deg = 0; deg <= degree_cap; ++deg) {
        std::vector<ExpKey> slab;
        for (const auto& k : win.monomials)
            if (k.degree() == deg) slab.push_back(k);
        std::vector<ExpKey> image = deg == 0 ? std::vector<ExpKey>{}
                                             : [&] {
                                                   std::vector<ExpKey> im;
                                                   for (const auto& k : win.monomials)
                                                       if (k.degree() == deg - 1) im.push_back(k);
                                                   return im;
                                               }();
        std::map<ExpKey, uint32_t, GradedLexDesc> im_index;
        for (uint32_t i = 0; i < image.size(); ++i) im_index.emplace(image[i], i);

        ZpnMatrix slab_matrix(mod, uint32_t(slab.size()), uint32_t(ops * image.size()));
        for (uint32_t r = 0; r < slab.size(); ++r) {
            for (uint32_t pair = 0; pair < alg->pairs; ++pair) {
                for (int withx = 1; withx >= 0; --withx) {
                    AdImage im = ad_image(*alg, slab[r], pair, withx == 1);
                    if (!im.nonzero) continue;
                    uint32_t op = 2 * pair + (withx == 1 ? 0 : 1);
                    uint32_t col = uint32_t(op * image.size()) + im_index.at(im.key);
                    slab_matrix.set(r, col, im.coeff);
                }
            }
        }
        ZpnMatrix ker = chainring::kernel(slab_matrix);
        for (uint32_t r = 0; r < ker.rows(); ++r) {
            SparseRow global;
            for (const auto& [c, v] : ker.row(r).ent)
                global.ent.emplace_back(win.index.at(slab[c]), v);
            std::sort(global.ent.begin(), global.ent.end());
            rows.append_row(std::move(global));
        }
    }
    return TruncatedIdealSpan{alg, level, degree_cap, chainring::howell_form(rows)};
}

TruncatedIdealSpan center_basis_mod(const AlgebraPtr& alg, uint32_t level, uint32_t degree_cap,
                                    const ZpnMatrix* ideal_rows) {
    if (!ideal_rows) return center_basis(alg, level, degree_cap);
    const PModulus mod(alg->mod.p, level);
    MonomialWindow win(alg, degree_cap);
    const uint32_t ops = uint32_t(alg->nvars());
    // image coordinates: commutators live in degree <= cap-1
    const uint32_t image_first = win.first_col_of_window(degree_cap == 0 ? 0 : degree_cap - 1);
    const uint32_t image_coords = win.coords() - image_first;
    auto image_col = [&](const ExpKey& k) { return win.index.at(k) - image_first; };

    // the ideal constraint rows, restricted to the image window
    ZpnMatrix ideal_howell = chainring::howell_form(*ideal_rows);
    ZpnMatrix ideal_window = chainring::span_suffix(ideal_howell, image_first);

    const uint32_t unknowns = win.coords();
    ZpnMatrix stacked(mod, 0, ops * image_coords);
    // rows for the element coordinates
    for (uint32_t r = 0; r < unknowns; ++r) {
        SparseRow row;
        for (uint32_t pair = 0; pair < alg->pairs; ++pair)
            for (int withx = 1; withx >= 0; --withx) {
                AdImage im = ad_image(*alg, win.monomials[r], pair, withx == 1);
                if (!im.nonzero) continue;
                uint32_t op = 2 * pair + (withx == 1 ? 0 : 1);
                row.ent.emplace_back(op * image_coords + image_col(im.key),
                                     chainring::canon_mod(im.coeff, mod.pn));
            }
        std::sort(row.ent.begin(), row.ent.end());
        std::erase_if(row.ent, [](const auto& e) { return e.second == 0; });
        stacked.append_row(std::move(row));
    }
    // slack rows: one copy of the ideal window per operator block
    for (uint32_t op = 0; op < ops; ++op)
        for (uint32_t r = 0; r < ideal_window.rows(); ++r) {
            SparseRow row;
            for (const auto& [c, v] : ideal_window.row(r).ent)
                row.ent.emplace_back(op * image_coords + (c - image_first), v);
            stacked.append_row(std::move(row));
        }

    ZpnMatrix ker = chainring::kernel(stacked);
    ZpnMatrix rows(mod, 0, win.coords());
    for (uint32_t r = 0; r < ker.rows(); ++r) {
        SparseRow elem;
        for (const auto& [c, v] : ker.row(r).ent) {
            if (c >= unknowns) break;
            elem.ent.emplace_back(c, v);
        }
        if (!elem.empty()) rows.append_row(std::move(elem));
    }
    rows.append_rows(ideal_howell);
    return TruncatedIdealSpan{alg, level, degree_cap, chainring::howell_form(rows)};
}

TruncatedIdealSpan ideal_span_basis(const std::vector<WeylElement>& generators, uint32_t level,
                                    uint32_t degree_cap) {
    if (generators.empty()) throw domain_error("ideal_span_basis: no generators");
    AlgebraPtr alg = generators.front().algebra();
    const PModulus mod(alg->mod.p, level);
    MonomialWindow win(alg, degree_cap);

    std::vector<WeylElement> gens;
    for (const auto& g : generators) {
        if (g.degree() > degree_cap)
            throw domain_error("ideal_span_basis: generator exceeds the degree cap");
        gens.push_back(g.level() == level ? g
                       : g.level() > level ? reduce_mod(g, level)
                                           : lift_to(g, level));
    }

    // monomial * g * monomial sandwiches within the cap
    std::set<SparseRow> seen;
    ZpnMatrix rows(mod, 0, win.coords());
    for (const auto& g : gens) {
        uint32_t budget = degree_cap - g.degree();
        auto multipliers = monomials_up_to_degree(alg->nvars(), budget);
        for (const auto& lm : multipliers) {
            uint32_t left_deg = lm.degree();
            WeylElement lg = WeylElement::monomial(alg, level, lm) * g;
            for (const auto& rm : multipliers) {
                if (left_deg + rm.degree() > budget) continue;
                WeylElement s = lg * WeylElement::monomial(alg, level, rm);
                if (s.is_zero() || s.degree() > degree_cap) continue;
                SparseRow row = win.to_vector(s);
                if (seen.insert(row).second) rows.append_row(std::move(row));
            }
        }
    }
    ZpnMatrix h = chainring::howell_form(rows);

    // closure passes: multiply the basis by the generators on both sides
    // until the span is a fixed point (combinations can drop degree, so
    // the sandwich set alone is not enough at the boundary)
    for (;;) {
        ZpnMatrix extended = h;
        for (uint32_t r = 0; r < h.rows(); ++r) {
            WeylElement e = win.to_element(h.row(r), level);
            if (e.degree() + 1 > degree_cap) continue;
            for (const auto& name : alg->var_names) {
                WeylElement v = WeylElement::generator(alg, level, name);
                for (const WeylElement& prod : {v * e, e * v}) {
                    if (prod.is_zero() || prod.degree() > degree_cap) continue;
                    extended.append_row(win.to_vector(prod));
                }
            }
        }
        ZpnMatrix h2 = chainring::howell_form(extended);
        if (h2 == h) break;
        h = std::move(h2);
    }
    return TruncatedIdealSpan{alg, level, degree_cap, std::move(h)};
}

ZpnMatrix ideal_intersect_center(const TruncatedIdealSpan& ideal) {
    TruncatedIdealSpan z = center_basis(ideal.algebra, ideal.level, ideal.degree_cap);
    return chainring::span_intersect(ideal.basis, z.basis);
}

CentralGenReport central_generation_check(const std::vector<WeylElement>& generators,
                                          uint32_t level, uint32_t degree_cap) {
    if (generators.empty()) throw domain_error("central_generation_check: no generators");
    AlgebraPtr alg = generators.front().algebra();
    const uint32_t p = alg->mod.p;

    CentralGenReport rep;
    rep.degree_cap = degree_cap;
    rep.comparison_window = degree_cap > p ? degree_cap - p : 0;

    // A central generator only has to fit the cap itself; a non-central
    // one needs the phi-lift of its mod-p center image, which sits at
    // degree p^(m-1) * deg(g mod p).
    uint32_t need = 0;
    uint64_t pm1 = 1;
    for (uint32_t i = 1; i < level; ++i) pm1 *= p;
    for (const auto& g : generators) {
        bool central = true;
        for (const auto& name : alg->var_names)
            central = central &&
                      commutator(g, WeylElement::generator(alg, g.level(), name)).is_zero();
        uint32_t need_g = central ? g.degree()
                                  : uint32_t(pm1 * reduce_mod(g, 1).degree());
        need = std::max(need, need_g);
    }
    rep.truncation_warning = need > degree_cap;

    TruncatedIdealSpan ideal = ideal_span_basis(generators, level, degree_cap);
    MonomialWindow win(ideal.algebra, degree_cap);
    rep.center_intersection = ideal_intersect_center(ideal);

    // J = (Z cap I) A within the cap
    std::vector<WeylElement> central_gens;
    for (uint32_t r = 0; r < rep.center_intersection.rows(); ++r)
        central_gens.push_back(win.to_element(rep.center_intersection.row(r), level));
    ZpnMatrix jbasis(chainring::PModulus(p, level), 0, win.coords());
    if (!central_gens.empty())
        jbasis = ideal_span_basis(central_gens, level, degree_cap).basis;

    const uint32_t wfirst = win.first_col_of_window(rep.comparison_window);
    ZpnMatrix iw = chainring::span_suffix(ideal.basis, wfirst);
    ZpnMatrix jw = chainring::span_suffix(jbasis, wfirst);

    if (chainring::span_equal(iw, jw)) {
        rep.verdict = CentralGenReport::Verdict::generated;
        return rep;
    }
    rep.verdict = CentralGenReport::Verdict::not_generated_within_cap;
    // witness: a minimal-degree Howell row of the windowed ideal that is
    // outside the centrally generated span (rows are degree-descending,
    // so scan from the back)
    auto jfull = chainring::howell_form_with_transform(jbasis);
    for (uint32_t i = iw.rows(); i-- > 0;) {
        if (chainring::in_row_span(jfull, iw.row(i)).member) continue;
        if (!chainring::in_row_span(ideal.basis, iw.row(i)).member)
            throw internal_error("central_generation_check: witness fell outside the ideal");
        rep.witness = win.to_element(iw.row(i), level);
        return rep;
    }
    throw internal_error("central_generation_check: window mismatch without a witness row");
}

} // namespace wittquant::quantization
