#include "wittquant/chainring/matrix.hpp"

#include <algorithm>
#include <map>

namespace wittquant::chainring {

uint64_t SparseRow::at(uint32_t col) const {
    auto it = std::lower_bound(ent.begin(), ent.end(), col,
                               [](const auto& e, uint32_t c) { return e.first < c; });
    return (it != ent.end() && it->first == col) ? it->second : 0;
}

SparseRow row_axpy(const SparseRow& r, uint64_t c, const SparseRow& s, uint64_t pn) {
    if (c == 0) return r;
    SparseRow out;
    out.ent.reserve(r.ent.size() + s.ent.size());
    std::size_t i = 0, j = 0;
    while (i < r.ent.size() || j < s.ent.size()) {
        if (j == s.ent.size() || (i < r.ent.size() && r.ent[i].first < s.ent[j].first)) {
            out.ent.push_back(r.ent[i++]);
        } else if (i == r.ent.size() || s.ent[j].first < r.ent[i].first) {
            uint64_t v = mul_mod(c, s.ent[j].second, pn);
            if (v) out.ent.emplace_back(s.ent[j].first, v);
            ++j;
        } else {
            uint64_t v = add_mod(r.ent[i].second, mul_mod(c, s.ent[j].second, pn), pn);
            if (v) out.ent.emplace_back(r.ent[i].first, v);
            ++i, ++j;
        }
    }
    return out;
}

SparseRow row_scale(const SparseRow& r, uint64_t c, uint64_t pn) {
    SparseRow out;
    if (c == 0) return out;
    out.ent.reserve(r.ent.size());
    for (const auto& [col, v] : r.ent) {
        uint64_t w = mul_mod(c, v, pn);
        if (w) out.ent.emplace_back(col, w);
    }
    return out;
}

ZpnMatrix::ZpnMatrix(PModulus mod, uint32_t rows, uint32_t cols)
    : mod_(mod), cols_(cols), rows_(rows) {}

ZpnMatrix ZpnMatrix::from_dense(PModulus mod, uint32_t cols,
                                const std::vector<std::vector<int64_t>>& rows) {
    ZpnMatrix m(mod, uint32_t(rows.size()), cols);
    for (uint32_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw domain_error("from_dense: ragged rows");
        for (uint32_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ZpnMatrix ZpnMatrix::identity(PModulus mod, uint32_t dim) {
    ZpnMatrix m(mod, dim, dim);
    for (uint32_t i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

void ZpnMatrix::set(uint32_t i, uint32_t j, int64_t v) {
    if (j >= cols_) throw domain_error("ZpnMatrix::set: column out of range");
    uint64_t c = canon_mod(v, mod_.pn);
    auto& ent = rows_[i].ent;
    auto it = std::lower_bound(ent.begin(), ent.end(), j,
                               [](const auto& e, uint32_t col) { return e.first < col; });
    if (it != ent.end() && it->first == j) {
        if (c) it->second = c;
        else ent.erase(it);
    } else if (c) {
        ent.insert(it, {j, c});
    }
}

void ZpnMatrix::append_row(SparseRow r) {
    for (auto& [c, v] : r.ent)
        if (c >= cols_) throw domain_error("append_row: column out of range");
    rows_.push_back(std::move(r));
}

void ZpnMatrix::append_rows(const ZpnMatrix& other) {
    if (!(other.mod_ == mod_) || other.cols_ != cols_)
        throw domain_error("append_rows: shape or modulus mismatch");
    for (const auto& r : other.rows_) rows_.push_back(r);
}

std::vector<std::vector<uint64_t>> ZpnMatrix::to_dense() const {
    std::vector<std::vector<uint64_t>> d(rows(), std::vector<uint64_t>(cols_, 0));
    for (uint32_t i = 0; i < rows(); ++i)
        for (const auto& [c, v] : rows_[i].ent) d[i][c] = v;
    return d;
}

namespace {

// Row carrying its transform history (coefficients on the original rows).
struct AugRow {
    SparseRow left;  // over the matrix columns
    SparseRow right; // over the original row indices
};

struct HowellEngine {
    PModulus mod;
    std::vector<AugRow> work;
    std::vector<AugRow> res;     // pivot rows, pivot columns strictly increasing
    std::vector<AugRow> kernels; // rows whose left part vanished

    void run() {
        // sort worklist by leading column so we sweep columns left to right
        auto by_lead = [](const AugRow& a, const AugRow& b) {
            return a.left.leading_col() < b.left.leading_col();
        };
        std::erase_if(work, [this](AugRow& r) {
            if (r.left.empty()) {
                if (!r.right.empty()) kernels.push_back(r);
                return true;
            }
            return false;
        });
        while (!work.empty()) {
            std::sort(work.begin(), work.end(), by_lead);
            uint32_t col = work.front().left.leading_col();
            std::size_t cnt = 0;
            while (cnt < work.size() && work[cnt].left.leading_col() == col) ++cnt;
            // pivot = candidate of minimal valuation at this column
            std::size_t best = 0;
            uint32_t bestval = mod.n + 1;
            for (std::size_t i = 0; i < cnt; ++i) {
                uint32_t v = mod.valuation(work[i].left.leading_val());
                if (v < bestval) {
                    bestval = v;
                    best = i;
                }
            }
            std::swap(work[0], work[best]);
            AugRow pivot = std::move(work[0]);
            // normalize leading entry to p^v
            uint64_t pv = mod.p_pow(bestval);
            uint64_t unit = pivot.left.leading_val() / pv;
            uint64_t uinv = inv_mod(unit, mod.pn);
            pivot.left = row_scale(pivot.left, uinv, mod.pn);
            pivot.right = row_scale(pivot.right, uinv, mod.pn);
            // eliminate the column from the other candidates
            std::vector<AugRow> next;
            next.reserve(work.size());
            for (std::size_t i = 1; i < work.size(); ++i) {
                AugRow& r = work[i];
                if (i < cnt) {
                    uint64_t e = r.left.leading_val();
                    uint64_t q = neg_mod(e / pv, mod.pn); // e has valuation >= bestval
                    r.left = row_axpy(r.left, q, pivot.left, mod.pn);
                    r.right = row_axpy(r.right, q, pivot.right, mod.pn);
                    if (r.left.empty()) {
                        if (!r.right.empty()) kernels.push_back(std::move(r));
                        continue;
                    }
                }
                next.push_back(std::move(r));
            }
            // Howell completion: p^(n-v) * pivot row stays in the span and
            // starts strictly to the right of the pivot column.
            if (bestval > 0) {
                uint64_t c = mod.p_pow(mod.n - bestval);
                AugRow comp{row_scale(pivot.left, c, mod.pn), row_scale(pivot.right, c, mod.pn)};
                if (comp.left.empty()) {
                    if (!comp.right.empty()) kernels.push_back(std::move(comp));
                } else {
                    next.push_back(std::move(comp));
                }
            }
            res.push_back(std::move(pivot));
            work = std::move(next);
        }
        // reduce entries above each pivot into [0, p^v)
        for (std::size_t k = 0; k < res.size(); ++k) {
            uint32_t col = res[k].left.leading_col();
            uint64_t pv = res[k].left.leading_val();
            for (std::size_t j = 0; j < k; ++j) {
                uint64_t e = res[j].left.at(col);
                uint64_t q = neg_mod((e - e % pv) / pv, mod.pn);
                if (q) {
                    res[j].left = row_axpy(res[j].left, q, res[k].left, mod.pn);
                    res[j].right = row_axpy(res[j].right, q, res[k].right, mod.pn);
                }
            }
        }
    }
};

HowellEngine reduce_augmented(const ZpnMatrix& m) {
    HowellEngine eng;
    eng.mod = m.modulus();
    eng.work.reserve(m.rows());
    for (uint32_t i = 0; i < m.rows(); ++i) {
        AugRow r;
        r.left = m.row(i);
        r.right.ent.emplace_back(i, 1);
        eng.work.push_back(std::move(r));
    }
    eng.run();
    return eng;
}

} // namespace

ZpnMatrix howell_form(const ZpnMatrix& m) {
    HowellEngine eng = reduce_augmented(m);
    ZpnMatrix h(m.modulus(), 0, m.cols());
    for (auto& r : eng.res) h.append_row(std::move(r.left));
    return h;
}

HowellWithTransform howell_form_with_transform(const ZpnMatrix& m) {
    HowellEngine eng = reduce_augmented(m);
    HowellWithTransform out{ZpnMatrix(m.modulus(), 0, m.cols()),
                            ZpnMatrix(m.modulus(), 0, m.rows())};
    for (auto& r : eng.res) {
        out.howell.append_row(std::move(r.left));
        out.transform.append_row(std::move(r.right));
    }
    return out;
}

ZpnMatrix kernel(const ZpnMatrix& m) {
    HowellEngine eng = reduce_augmented(m);
    ZpnMatrix k(m.modulus(), 0, m.rows());
    for (auto& r : eng.kernels) k.append_row(std::move(r.right));
    return howell_form(k);
}

SpanMembership in_row_span(const HowellWithTransform& h, const SparseRow& v) {
    const PModulus& mod = h.howell.modulus();
    SpanMembership out;
    out.certificate.assign(h.transform.cols(), 0);
    SparseRow rest = v;
    SparseRow cert; // coefficients over the original rows
    for (uint32_t i = 0; i < h.howell.rows() && !rest.empty(); ++i) {
        const SparseRow& piv = h.howell.row(i);
        if (piv.leading_col() > rest.leading_col()) break;
        uint64_t e = rest.at(piv.leading_col());
        if (e == 0) continue;
        uint64_t pv = piv.leading_val();
        if (e % pv != 0) return out; // valuation too small at the pivot
        uint64_t q = e / pv;
        rest = row_axpy(rest, neg_mod(q, mod.pn), piv, mod.pn);
        cert = row_axpy(cert, q, h.transform.row(i), mod.pn);
    }
    if (!rest.empty()) return out;
    out.member = true;
    for (const auto& [c, val] : cert.ent) out.certificate[c] = val;
    return out;
}

SpanMembership in_row_span(const ZpnMatrix& m, const SparseRow& v) {
    for (const auto& [c, val] : v.ent)
        if (c >= m.cols()) throw domain_error("in_row_span: dimension mismatch");
    return in_row_span(howell_form_with_transform(m), v);
}

bool span_equal(const ZpnMatrix& a, const ZpnMatrix& b) {
    return howell_form(a) == howell_form(b);
}

ZpnMatrix span_sum(const ZpnMatrix& a, const ZpnMatrix& b) {
    ZpnMatrix s = a;
    s.append_rows(b);
    return howell_form(s);
}

ZpnMatrix span_intersect(const ZpnMatrix& a, const ZpnMatrix& b) {
    // kernel vectors (u | w) of the stacked rows satisfy u*A = -w*B,
    // so the u*A generate the intersection.
    ZpnMatrix stacked = a;
    stacked.append_rows(b);
    ZpnMatrix k = kernel(stacked);
    ZpnMatrix gens(a.modulus(), 0, a.cols());
    for (uint32_t i = 0; i < k.rows(); ++i) {
        SparseRow elem;
        for (const auto& [c, coef] : k.row(i).ent) {
            if (c >= a.rows()) break; // rows of the b-block
            elem = row_axpy(elem, coef, a.row(c), a.modulus().pn);
        }
        if (!elem.empty()) gens.append_row(std::move(elem));
    }
    return howell_form(gens);
}

ZpnMatrix span_suffix(const ZpnMatrix& howell, uint32_t first_col) {
    ZpnMatrix out(howell.modulus(), 0, howell.cols());
    for (uint32_t i = 0; i < howell.rows(); ++i)
        if (howell.row(i).leading_col() >= first_col) out.append_row(howell.row(i));
    return out;
}

uint64_t span_cardinality(const ZpnMatrix& howell) {
    const PModulus& mod = howell.modulus();
    uint64_t card = 1;
    for (uint32_t i = 0; i < howell.rows(); ++i) {
        uint32_t v = mod.valuation(howell.row(i).leading_val());
        card *= mod.p_pow(mod.n - v);
    }
    return card;
}

ZpnMatrix reduce_rows_mod(const ZpnMatrix& m, uint32_t to_length) {
    PModulus lower(m.modulus().p, to_length);
    ZpnMatrix out(lower, 0, m.cols());
    for (uint32_t i = 0; i < m.rows(); ++i) {
        SparseRow r;
        for (const auto& [c, v] : m.row(i).ent) {
            uint64_t w = v % lower.pn;
            if (w) r.ent.emplace_back(c, w);
        }
        out.append_row(std::move(r));
    }
    return out;
}

} // namespace wittquant::chainring
