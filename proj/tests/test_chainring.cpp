#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "wittquant/chainring/matrix.hpp"

using namespace wittquant;
using namespace wittquant::chainring;

namespace {

// Exhaustive span of the rows: every coefficient combination, as a set of
// dense vectors.  The independent oracle for Howell-form identities.
std::set<std::vector<uint64_t>> span_set(const ZpnMatrix& m) {
    const uint64_t pn = m.modulus().pn;
    std::set<std::vector<uint64_t>> out;
    std::vector<uint64_t> coef(m.rows(), 0);
    for (;;) {
        SparseRow acc;
        for (uint32_t i = 0; i < m.rows(); ++i) acc = row_axpy(acc, coef[i], m.row(i), pn);
        std::vector<uint64_t> dense(m.cols(), 0);
        for (const auto& [c, v] : acc.ent) dense[c] = v;
        out.insert(dense);
        uint32_t i = 0;
        while (i < coef.size() && ++coef[i] == pn) coef[i++] = 0;
        if (i == coef.size()) break;
        if (m.rows() == 0) break;
    }
    return out;
}

ZpnMatrix random_matrix(std::mt19937_64& eng, PModulus mod, uint32_t rows, uint32_t cols) {
    ZpnMatrix m(mod, rows, cols);
    for (uint32_t i = 0; i < rows; ++i)
        for (uint32_t j = 0; j < cols; ++j) m.set(i, j, int64_t(eng() % mod.pn));
    return m;
}

} // namespace

TEST_CASE("modulus validation and valuation") {
    CHECK_THROWS_AS(PModulus(4, 1), domain_error);
    CHECK_THROWS_AS(PModulus(2, 1), domain_error);
    CHECK_THROWS_AS(PModulus(3, 0), domain_error);
    PModulus m(3, 2);
    CHECK(m.pn == 9);
    CHECK(m.valuation(0) == 2); // valuation(0) = n by convention
    CHECK(m.valuation(3) == 1);
    CHECK(m.valuation(6) == 1);
    CHECK(m.valuation(4) == 0);
}

TEST_CASE("scalar arithmetic examples") {
    PModulus m(3, 2);
    CHECK((ZpnScalar(m, 4) + ZpnScalar(m, 7)).value() == 2); // 11 mod 9
    CHECK(ZpnScalar(m, 2).invert().value() == 5);            // 2*5 = 10 = 1 mod 9
    CHECK_THROWS_AS(ZpnScalar(m, 3).invert(), domain_error); // valuation 1
    CHECK_THROWS_AS(ZpnScalar(m, 5) + ZpnScalar(PModulus(3, 1), 1), domain_error);
}

TEST_CASE("exact division by p powers") {
    PModulus m32(3, 2), m33(3, 3);
    auto a = exact_divide_by_p_power(ZpnScalar(m32, 6), 1);
    CHECK(a.modulus().n == 1);
    CHECK(a.value() == 2);
    auto b = exact_divide_by_p_power(ZpnScalar(m33, 9), 2);
    CHECK(b.modulus().n == 1);
    CHECK(b.value() == 1);
    CHECK_THROWS_AS(exact_divide_by_p_power(ZpnScalar(m32, 4), 1), domain_error);
}

TEST_CASE("ring axioms exhaustive for p=3, n<=2") {
    for (uint32_t n = 1; n <= 2; ++n) {
        PModulus m(3, n);
        for (uint64_t a = 0; a < m.pn; ++a)
            for (uint64_t b = 0; b < m.pn; ++b) {
                ZpnScalar x(m, int64_t(a)), y(m, int64_t(b));
                CHECK((x + y).value() == (a + b) % m.pn);
                CHECK((x * y).value() == (a * b) % m.pn);
                CHECK((x + y) == (y + x));
                CHECK((x * y) == (y * x));
                CHECK((x - y) == (x + (-y)));
                for (uint64_t c = 0; c < m.pn; ++c) {
                    ZpnScalar z(m, int64_t(c));
                    CHECK(((x + y) + z) == (x + (y + z)));
                    CHECK(((x * y) * z) == (x * (y * z)));
                    CHECK((x * (y + z)) == (x * y + x * z));
                }
            }
    }
}

TEST_CASE("howell form: fixed examples") {
    PModulus m(3, 2);
    // already Howell
    auto a = ZpnMatrix::from_dense(m, 2, {{3, 0}, {0, 3}});
    CHECK(howell_form(a) == a);
    // unit scaling normalizes the pivot
    auto b = ZpnMatrix::from_dense(m, 2, {{2, 0}});
    auto bh = howell_form(b);
    CHECK(bh == ZpnMatrix::from_dense(m, 2, {{1, 0}}));
    // equal spans get identical forms (oracle: exhaustive span enumeration)
    auto c1 = ZpnMatrix::from_dense(m, 2, {{1, 1}, {0, 3}});
    auto c2 = ZpnMatrix::from_dense(m, 2, {{1, 4}, {0, 3}});
    REQUIRE(span_set(c1) == span_set(c2));
    CHECK(howell_form(c1) == howell_form(c2));
}

TEST_CASE("howell form: idempotent and span preserving on random inputs") {
    std::mt19937_64 eng(42);
    for (uint32_t p : {3u, 5u})
        for (uint32_t n = 1; n <= 3; ++n) {
            PModulus mod(p, n);
            for (int rep = 0; rep < 17; ++rep) {
                auto m = random_matrix(eng, mod, 2 + rep % 3, 2 + rep % 4);
                auto h = howell_form(m);
                CHECK(howell_form(h) == h);
                // both directions of span containment, with certificates
                auto hwt = howell_form_with_transform(m);
                for (uint32_t i = 0; i < h.rows(); ++i) CHECK(in_row_span(hwt, h.row(i)).member);
                auto hh = howell_form_with_transform(h);
                for (uint32_t i = 0; i < m.rows(); ++i) CHECK(in_row_span(hh, m.row(i)).member);
            }
        }
}

TEST_CASE("howell canonicity exhaustively on 1x2 matrices over Z/9") {
    // group matrices by their exhaustive span; every group must share one form
    PModulus m(3, 2);
    std::map<std::set<std::vector<uint64_t>>, ZpnMatrix> by_span;
    for (uint64_t a = 0; a < 9; ++a)
        for (uint64_t b = 0; b < 9; ++b) {
            auto mat = ZpnMatrix::from_dense(m, 2, {{int64_t(a), int64_t(b)}});
            auto h = howell_form(mat);
            auto s = span_set(mat);
            auto it = by_span.find(s);
            if (it == by_span.end()) by_span.emplace(std::move(s), h);
            else CHECK(it->second == h);
        }
}

TEST_CASE("howell canonicity under random span-preserving transforms") {
    std::mt19937_64 eng(101);
    for (uint32_t p : {3u, 5u})
        for (uint32_t n = 2; n <= 3; ++n) {
            PModulus mod(p, n);
            for (int rep = 0; rep < 15; ++rep) {
                auto m = random_matrix(eng, mod, 3, 4);
                auto h = howell_form(m);
                // scramble: unit row scalings, row additions, redundant rows
                ZpnMatrix s = m;
                for (int step = 0; step < 12; ++step) {
                    uint32_t i = uint32_t(eng() % s.rows());
                    uint32_t j = uint32_t(eng() % s.rows());
                    switch (eng() % 3) {
                    case 0: { // scale by a unit
                        uint64_t u = 1 + eng() % (mod.pn - 1);
                        while (u % p == 0) u = 1 + eng() % (mod.pn - 1);
                        s.row(i) = row_scale(s.row(i), u, mod.pn);
                        break;
                    }
                    case 1: // add a multiple of another row
                        if (i != j) s.row(i) = row_axpy(s.row(i), eng() % mod.pn, s.row(j), mod.pn);
                        break;
                    default: // append a redundant combination
                        s.append_row(row_axpy(s.row(i), eng() % mod.pn, s.row(j), mod.pn));
                    }
                }
                CHECK(howell_form(s) == h);
            }
        }
}

TEST_CASE("kernel: fixed examples") {
    PModulus m(3, 2);
    auto k1 = kernel(ZpnMatrix::from_dense(m, 1, {{3}}));
    // kernel of (3) is {0, 3, 6}, generated by 3
    CHECK(span_set(k1) == span_set(ZpnMatrix::from_dense(m, 1, {{3}})));
    auto k2 = kernel(ZpnMatrix::identity(m, 2));
    CHECK(k2.rows() == 0);
    // exhaustive oracle over (Z/9)^2 for M = [[1],[3]]
    auto mtx = ZpnMatrix::from_dense(m, 1, {{1}, {3}});
    std::set<std::vector<uint64_t>> expected;
    for (uint64_t a = 0; a < 9; ++a)
        for (uint64_t b = 0; b < 9; ++b)
            if ((a * 1 + b * 3) % 9 == 0) expected.insert({a, b});
    CHECK(span_set(kernel(mtx)) == expected);
}

TEST_CASE("kernel: rank-nullity and annihilation on random small matrices") {
    std::mt19937_64 eng(7);
    for (uint32_t p : {3u, 5u})
        for (uint32_t n = 1; n <= 2; ++n) {
            PModulus mod(p, n);
            for (int rep = 0; rep < 12; ++rep) {
                uint32_t rows = 1 + rep % 3, cols = 1 + (rep + 1) % 3;
                auto m = random_matrix(eng, mod, rows, cols);
                auto k = kernel(m);
                for (uint32_t i = 0; i < k.rows(); ++i) {
                    SparseRow image;
                    for (const auto& [c, v] : k.row(i).ent)
                        image = row_axpy(image, v, m.row(c), mod.pn);
                    CHECK(image.empty());
                }
                // |kernel| * |row span| = (p^n)^rows
                uint64_t total = 1;
                for (uint32_t i = 0; i < rows; ++i) total *= mod.pn;
                CHECK(span_cardinality(k) * span_cardinality(howell_form(m)) == total);
                if (rows <= 3 && mod.pn <= 9)
                    CHECK(span_cardinality(k) == span_set(k).size());
            }
        }
}

TEST_CASE("in_row_span: fixed examples and certificates") {
    PModulus m(3, 2);
    auto mtx = ZpnMatrix::from_dense(m, 2, {{3, 0}});
    SparseRow zero;
    CHECK(in_row_span(mtx, zero).member);
    SparseRow v6;
    v6.ent = {{0, 6}};
    auto r = in_row_span(mtx, v6);
    REQUIRE(r.member);
    CHECK(r.certificate == std::vector<uint64_t>{2});
    SparseRow v1;
    v1.ent = {{0, 1}};
    // oracle: none of the 9 multiples of (3,0) equals (1,0)
    bool any = false;
    for (uint64_t c = 0; c < 9; ++c) any = any || (c * 3 % 9 == 1);
    REQUIRE(!any);
    CHECK(!in_row_span(mtx, v1).member);
}

TEST_CASE("in_row_span agrees with exhaustive enumeration on all 2x2 matrices over Z/9") {
    PModulus m(3, 2);
    std::mt19937_64 eng(11);
    // grouping by exhaustive span also certifies Howell canonicity:
    // equal spans must produce byte-identical forms
    std::map<std::set<std::vector<uint64_t>>, ZpnMatrix> canonical;
    for (uint64_t code = 0; code < 9 * 9 * 9 * 9; ++code) {
        uint64_t a = code % 9, b = code / 9 % 9, c = code / 81 % 9, d = code / 729 % 9;
        auto mtx = ZpnMatrix::from_dense(
            m, 2, {{int64_t(a), int64_t(b)}, {int64_t(c), int64_t(d)}});
        auto span = span_set(mtx);
        auto hwt = howell_form_with_transform(mtx);
        auto it = canonical.find(span);
        if (it == canonical.end()) canonical.emplace(span, hwt.howell);
        else CHECK(it->second == hwt.howell);
        // all 81 candidate vectors
        for (uint64_t x = 0; x < 9; ++x)
            for (uint64_t y = 0; y < 9; ++y) {
                SparseRow v;
                if (x) v.ent.emplace_back(0, x);
                if (y) v.ent.emplace_back(1, y);
                auto got = in_row_span(hwt, v);
                CHECK(got.member == (span.count({x, y}) > 0));
                if (got.member) {
                    // replay the certificate against the original rows
                    SparseRow back;
                    for (uint32_t i = 0; i < 2; ++i)
                        back = row_axpy(back, got.certificate[i], mtx.row(i), 9);
                    CHECK(back == v);
                }
            }
    }
}

TEST_CASE("span sum, intersection and suffix windows") {
    PModulus m(3, 2);
    std::mt19937_64 eng(5);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = random_matrix(eng, m, 2, 3);
        auto b = random_matrix(eng, m, 2, 3);
        auto sa = span_set(a), sb = span_set(b);
        std::set<std::vector<uint64_t>> expect_meet;
        for (const auto& v : sa)
            if (sb.count(v)) expect_meet.insert(v);
        CHECK(span_set(span_intersect(a, b)) == expect_meet);
        auto sum = span_sum(a, b);
        for (uint32_t i = 0; i < a.rows(); ++i)
            CHECK(in_row_span(sum, a.row(i)).member);
        for (uint32_t i = 0; i < b.rows(); ++i)
            CHECK(in_row_span(sum, b.row(i)).member);
        // suffix rows span exactly the elements supported on columns >= 1
        auto h = howell_form(a);
        auto suff = span_suffix(h, 1);
        std::set<std::vector<uint64_t>> expect_suffix;
        for (const auto& v : sa)
            if (v[0] == 0) expect_suffix.insert(v);
        CHECK(span_set(suff) == expect_suffix);
    }
}

TEST_CASE("reduce_rows_mod maps spans onto spans") {
    PModulus m(3, 2);
    auto a = ZpnMatrix::from_dense(m, 2, {{3, 1}, {0, 6}});
    auto r = reduce_rows_mod(a, 1);
    CHECK(r.modulus().pn == 3);
    CHECK(r.at(0, 0) == 0);
    CHECK(r.at(0, 1) == 1);
    CHECK(r.at(1, 1) == 0);
}
