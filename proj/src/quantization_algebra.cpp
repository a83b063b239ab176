#include "wittquant/quantization/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace wittquant::quantization {

namespace {

constexpr uint32_t max_pairs = 4; // 2r exponent slots must fit an ExpKey

/// C(n, k) mod p^len via the product formula with the p-valuation split
/// off, so no intermediate overflows and exact p-divisibility.
uint64_t binom_mod(uint64_t n, uint32_t k, uint32_t p, uint64_t pn, uint32_t len) {
    if (k == 0) return 1 % pn;
    if (n < k) return 0;
    int32_t val = 0;
    uint64_t unit = 1;
    for (uint32_t j = 1; j <= k; ++j) {
        uint64_t num = n - k + j;
        while (num % p == 0) {
            num /= p;
            ++val;
        }
        uint64_t den = j;
        while (den % p == 0) {
            den /= p;
            --val;
        }
        unit = chainring::mul_mod(unit % pn, num % pn, pn);
        unit = chainring::mul_mod(unit, chainring::inv_mod(den % pn, pn), pn);
    }
    if (val >= int32_t(len)) return 0;
    uint64_t pv = 1;
    for (int32_t j = 0; j < val; ++j) pv *= p;
    return chainring::mul_mod(unit, pv, pn);
}

uint64_t factorial_mod(uint32_t k, uint32_t p, uint64_t pn, uint32_t len) {
    uint32_t val = 0;
    uint64_t unit = 1;
    for (uint32_t j = 2; j <= k; ++j) {
        uint64_t d = j;
        while (d % p == 0) {
            d /= p;
            ++val;
        }
        unit = chainring::mul_mod(unit, d % pn, pn);
    }
    if (val >= len) return 0;
    uint64_t pv = 1;
    for (uint32_t j = 0; j < val; ++j) pv *= p;
    return chainring::mul_mod(unit, pv, pn);
}

} // namespace

AlgebraPtr make_weyl_algebra(uint32_t p, uint32_t n, uint32_t pairs, int weyl_sign) {
    if (pairs < 1 || pairs > max_pairs)
        throw domain_error("make_weyl_algebra: 1..4 symplectic pairs supported");
    if (weyl_sign != 1 && weyl_sign != -1)
        throw domain_error("make_weyl_algebra: weyl_sign must be +1 or -1");
    auto d = std::make_shared<QuantAlgebraDesc>();
    d->mod = PModulus(p, n);
    d->pairs = pairs;
    d->weyl_sign = weyl_sign;
    if (pairs == 1) {
        d->var_names = {"x", "y"};
    } else {
        for (uint32_t i = 1; i <= pairs; ++i) {
            d->var_names.push_back("x" + std::to_string(i));
            d->var_names.push_back("y" + std::to_string(i));
        }
    }
    return d;
}

WeylElement::WeylElement(AlgebraPtr alg, uint32_t level) : alg_(std::move(alg)), level_(level) {
    if (!alg_) throw domain_error("WeylElement: null algebra");
    if (level_ < 1 || level_ > alg_->mod.n) throw domain_error("WeylElement: level out of range");
    pn_ = alg_->mod.p_pow(level_);
}

WeylElement WeylElement::constant(AlgebraPtr alg, uint32_t level, int64_t c) {
    WeylElement e(std::move(alg), level);
    e.add_term(ExpKey{}, c);
    return e;
}

WeylElement WeylElement::generator(AlgebraPtr alg, uint32_t level, const std::string& name) {
    for (std::size_t i = 0; i < alg->var_names.size(); ++i)
        if (alg->var_names[i] == name) {
            WeylElement e(std::move(alg), level);
            e.add_term(ExpKey::unit(i), 1);
            return e;
        }
    throw domain_error("WeylElement::generator: unknown generator " + name);
}

WeylElement WeylElement::monomial(AlgebraPtr alg, uint32_t level, const ExpKey& k, int64_t c) {
    for (std::size_t i = alg->nvars(); i < ExpKey::capacity; ++i)
        if (k.e[i] != 0) throw domain_error("WeylElement::monomial: exponent outside the algebra");
    WeylElement e(std::move(alg), level);
    e.add_term(k, c);
    return e;
}

chainring::ZpnScalar WeylElement::coeff(const ExpKey& k) const {
    auto it = terms_.find(k);
    return chainring::ZpnScalar(PModulus(alg_->mod.p, level_),
                                it == terms_.end() ? 0 : int64_t(it->second));
}

void WeylElement::add_term(const ExpKey& k, int64_t c) {
    uint64_t cv = chainring::canon_mod(c, pn_);
    if (cv == 0) return;
    auto [it, inserted] = terms_.emplace(k, cv);
    if (!inserted) {
        it->second = chainring::add_mod(it->second, cv, pn_);
        if (it->second == 0) terms_.erase(it);
    }
}

void WeylElement::require_compatible(const WeylElement& o) const {
    if (!alg_ || !o.alg_) throw domain_error("WeylElement: detached element");
    if (alg_->mod.p != o.alg_->mod.p || alg_->pairs != o.alg_->pairs ||
        alg_->weyl_sign != o.alg_->weyl_sign)
        throw domain_error("WeylElement: algebra mismatch");
    if (level_ != o.level_) throw domain_error("WeylElement: level mismatch");
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    require_compatible(o);
    WeylElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, int64_t(c));
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
    require_compatible(o);
    WeylElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, int64_t(chainring::neg_mod(c, pn_)));
    return r;
}

WeylElement WeylElement::operator-() const {
    WeylElement r(alg_, level_);
    for (const auto& [k, c] : terms_) r.terms_[k] = chainring::neg_mod(c, pn_);
    return r;
}

WeylElement WeylElement::scaled(int64_t c) const {
    uint64_t cv = chainring::canon_mod(c, pn_);
    WeylElement r(alg_, level_);
    if (cv == 0) return r;
    for (const auto& [k, v] : terms_) {
        uint64_t w = chainring::mul_mod(v, cv, pn_);
        if (w) r.terms_.emplace(k, w);
    }
    return r;
}

// Normal-ordered product through divided-power derivatives:
//   f*g = sum over k of s^|k| (prod k_i!) D_y^k(f) . D_x^k(g)
// where D^k is the divided derivative (C(e, k) e -> e-k) and . is the
// commutative exponent-add product.  The sum stops as soon as
// prod k_i! = 0 mod p^level, which caps |k| around p*level.
WeylElement WeylElement::operator*(const WeylElement& o) const {
    require_compatible(o);
    const uint32_t p = alg_->mod.p;
    const uint32_t r = alg_->pairs;
    const uint64_t pn = pn_;

    std::unordered_map<ExpKey, uint64_t, ExpKeyHash> acc;
    acc.reserve(terms_.size() + o.terms_.size());

    // divided derivative of all y-slots (for f) or x-slots (for g)
    auto divided = [&](const Terms& src, const std::vector<uint32_t>& k, bool y_side) {
        std::vector<std::pair<ExpKey, uint64_t>> out;
        out.reserve(src.size());
        for (const auto& [key, c] : src) {
            uint64_t cv = c;
            ExpKey k2 = key;
            bool dead = false;
            for (uint32_t i = 0; i < r && !dead; ++i) {
                if (k[i] == 0) continue;
                std::size_t slot = y_side ? alg_->y_slot(i) : alg_->x_slot(i);
                if (key.e[slot] < k[i]) {
                    dead = true;
                    break;
                }
                cv = chainring::mul_mod(cv, binom_mod(key.e[slot], k[i], p, pn, level_), pn);
                if (cv == 0) dead = true;
                k2.e[slot] = uint16_t(k2.e[slot] - k[i]);
            }
            if (!dead && cv) out.emplace_back(k2, cv);
        }
        return out;
    };

    uint32_t max_ydeg = 0, max_xdeg = 0;
    for (const auto& [key, c] : terms_)
        for (uint32_t i = 0; i < r; ++i) max_ydeg = std::max<uint32_t>(max_ydeg, key.e[alg_->y_slot(i)]);
    for (const auto& [key, c] : o.terms_)
        for (uint32_t i = 0; i < r; ++i) max_xdeg = std::max<uint32_t>(max_xdeg, key.e[alg_->x_slot(i)]);
    const uint32_t kcap = std::min(max_ydeg, max_xdeg);

    std::vector<uint32_t> kvec(r, 0);
    auto contribute = [&](uint64_t fact_total, uint32_t ktotal) {
        if (fact_total == 0) return;
        auto fk = divided(terms_, kvec, /*y_side=*/true);
        if (fk.empty()) return;
        auto gk = divided(o.terms_, kvec, /*y_side=*/false);
        if (gk.empty()) return;
        uint64_t c0 = fact_total;
        if (alg_->weyl_sign < 0 && (ktotal & 1)) c0 = chainring::neg_mod(c0, pn);
        for (const auto& [ka, ca] : fk) {
            uint64_t cfa = chainring::mul_mod(c0, ca, pn);
            for (const auto& [kb, cb] : gk) {
                uint64_t& slot = acc[ka.plus(kb)];
                slot = chainring::add_mod(slot, chainring::mul_mod(cfa, cb, pn), pn);
            }
        }
    };

    // enumerate k-vectors; factorial factors go to zero fast mod p^level
    auto recurse = [&](auto&& self, uint32_t pair, uint64_t fact, uint32_t ktotal) -> void {
        if (pair == r) {
            contribute(fact, ktotal);
            return;
        }
        for (uint32_t k = 0; k <= kcap; ++k) {
            kvec[pair] = k;
            uint64_t f = chainring::mul_mod(fact, factorial_mod(k, p, pn, level_), pn);
            if (f == 0 && k > 0) break; // larger k only gains p-valuation
            self(self, pair + 1, f, ktotal + k);
        }
        kvec[pair] = 0;
    };
    recurse(recurse, 0, 1 % pn, 0);

    WeylElement out(alg_, level_);
    for (const auto& [k, c] : acc)
        if (c) out.terms_.emplace(k, c);
    return out;
}

WeylElement WeylElement::pow(uint64_t e) const {
    WeylElement acc = WeylElement::constant(alg_, level_, 1);
    WeylElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return acc;
}

bool WeylElement::operator==(const WeylElement& o) const {
    if (!alg_ || !o.alg_) return terms_.empty() && o.terms_.empty();
    return alg_->mod.p == o.alg_->mod.p && alg_->pairs == o.alg_->pairs &&
           level_ == o.level_ && terms_ == o.terms_;
}

std::string WeylElement::header() const {
    return "p=" + std::to_string(alg_->mod.p) + " n=" + std::to_string(alg_->mod.n) +
           " level=" + std::to_string(level_) + " r=" + std::to_string(alg_->pairs);
}

std::string WeylElement::body_str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < alg_->nvars(); ++i) {
            if (key.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += alg_->var_names[i];
            if (key.e[i] > 1) mono += "^" + std::to_string(key.e[i]);
        }
        if (mono.empty()) out += std::to_string(c);
        else if (c == 1) out += mono;
        else out += std::to_string(c) + "*" + mono;
    }
    return out;
}

std::string WeylElement::str() const { return header() + "; " + body_str(); }

WeylElement parse_weyl_element(AlgebraPtr alg, const std::string& text) {
    std::string body = text;
    uint32_t level = alg->mod.n;
    auto semi = text.find(';');
    if (semi != std::string::npos) {
        std::string head = text.substr(0, semi);
        body = text.substr(semi + 1);
        uint32_t p = 0, n = 0, r = 0;
        int got = std::sscanf(head.c_str(), " p=%u n=%u level=%u r=%u", &p, &n, &level, &r);
        if (got != 4) throw parse_error("bad Weyl element header: " + head);
        if (p != alg->mod.p || n != alg->mod.n || r != alg->pairs)
            throw parse_error("Weyl element header does not match the algebra");
    }
    // reuse the polynomial grammar over the generator names at this level
    auto desc = polyring::make_ring(alg->var_names, PModulus(alg->mod.p, level));
    polyring::Polynomial p = polyring::parse_polynomial(desc, body);
    WeylElement e(alg, level);
    for (const auto& [k, c] : p.terms()) e.add_term(k, int64_t(c));
    return e;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement divided_commutator(const WeylElement& a, const WeylElement& b, uint32_t m) {
    WeylElement c = commutator(a, b);
    if (m >= a.level())
        throw domain_error("divided_commutator: division leaves no residue length");
    const PModulus mod(a.algebra()->mod.p, a.level());
    const uint64_t pm = mod.p_pow(m);
    WeylElement out(a.algebra(), a.level() - m);
    for (const auto& [k, v] : c.terms()) {
        if (mod.valuation(v) < m)
            throw domain_error("divided_commutator: coefficient valuation below " +
                               std::to_string(m) + " (argument not central mod p^m)");
        out.add_term(k, int64_t(v / pm));
    }
    return out;
}

WeylElement reduce_mod(const WeylElement& a, uint32_t m) {
    if (m < 1 || m > a.level()) throw domain_error("reduce_mod: level out of range");
    WeylElement out(a.algebra(), m);
    for (const auto& [k, v] : a.terms()) out.add_term(k, int64_t(v));
    return out;
}

WeylElement lift_to(const WeylElement& a, uint32_t level) {
    if (level < a.level() || level > a.algebra()->mod.n)
        throw domain_error("lift_to: level out of range");
    WeylElement out(a.algebra(), level);
    for (const auto& [k, v] : a.terms()) out.add_term(k, int64_t(v));
    return out;
}

WeylElement v_map(const WeylElement& a) {
    uint32_t target = a.level() + 1;
    if (target > a.algebra()->mod.n) throw domain_error("v_map: level out of range");
    const uint32_t p = a.algebra()->mod.p;
    WeylElement out(a.algebra(), target);
    for (const auto& [k, v] : a.terms()) out.add_term(k, int64_t(v) * p);
    return out;
}

} // namespace wittquant::quantization
