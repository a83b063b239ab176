#pragma once

#include <memory>

#include "wittquant/chainring/scalar.hpp"
#include "wittquant/expkey.hpp"
#include "wittquant/polyring/ring.hpp"

namespace wittquant::quantization {

using chainring::PModulus;

/// The Weyl algebra in r symplectic pairs over Z/p^n: generators
/// x_1..x_r, y_1..y_r with [y_i, x_j] = weyl_sign * delta_ij and all
/// other commutators zero.  weyl_sign is the orientation convention
/// ([y, x] = +1 by default); flipping it is how the suite demonstrates
/// its own sign sensitivity.
struct QuantAlgebraDesc {
    PModulus mod;      // (p, n)
    uint32_t pairs = 1;
    int weyl_sign = +1;
    std::vector<std::string> var_names; // pair-major: x, y or x1, y1, x2, y2, ...

    std::size_t nvars() const { return 2 * std::size_t(pairs); }
    std::size_t x_slot(uint32_t pair) const { return 2 * std::size_t(pair); }
    std::size_t y_slot(uint32_t pair) const { return 2 * std::size_t(pair) + 1; }
};

using AlgebraPtr = std::shared_ptr<const QuantAlgebraDesc>;

AlgebraPtr make_weyl_algebra(uint32_t p, uint32_t n, uint32_t pairs = 1, int weyl_sign = +1);

/// Normally ordered element of A at a level m <= n: finitely many terms
/// c * x^a y^b with coefficients canonical in [0, p^m).  Every product
/// re-normalizes, so the normal order is the stored form.
class WeylElement {
public:
    using Terms = std::map<ExpKey, uint64_t, GradedLexDesc>;

    WeylElement() = default;
    WeylElement(AlgebraPtr alg, uint32_t level);
    static WeylElement constant(AlgebraPtr alg, uint32_t level, int64_t c);
    static WeylElement generator(AlgebraPtr alg, uint32_t level, const std::string& name);
    static WeylElement monomial(AlgebraPtr alg, uint32_t level, const ExpKey& k, int64_t c = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    uint32_t level() const { return level_; }
    uint64_t coeff_modulus() const { return pn_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    uint32_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
    std::size_t term_count() const { return terms_.size(); }
    chainring::ZpnScalar coeff(const ExpKey& k) const;

    void add_term(const ExpKey& k, int64_t c);

    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator-() const;
    WeylElement scaled(int64_t c) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement pow(uint64_t e) const;

    bool operator==(const WeylElement& o) const;
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    /// `p=3 n=2 level=2 r=1`
    std::string header() const;
    /// Element text in the polynomial grammar, normal order implied.
    std::string body_str() const;
    /// header + "; " + body.
    std::string str() const;

private:
    void require_compatible(const WeylElement& o) const;

    AlgebraPtr alg_;
    uint32_t level_ = 0;
    uint64_t pn_ = 1; // p^level
    Terms terms_;
};

WeylElement parse_weyl_element(AlgebraPtr alg, const std::string& text);

/// [a, b] = ab - ba.
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// (1/p^m)[a, b] at level n-m.  Every coefficient of [a, b] must have
/// valuation >= m; anything less means the first argument was not
/// central mod p^m and is reported as an error.
WeylElement divided_commutator(const WeylElement& a, const WeylElement& b, uint32_t m);

/// Reduction r : A_level -> A_m (ring map).
WeylElement reduce_mod(const WeylElement& a, uint32_t m);

/// Canonical lift: same normally ordered monomials, same canonical
/// coefficient representatives, higher level.
WeylElement lift_to(const WeylElement& a, uint32_t level);

/// v : A_(m-1) -> A_m, v(a) = p * lift(a); additive, r(v(a)) = p*a.
WeylElement v_map(const WeylElement& a);

} // namespace wittquant::quantization
