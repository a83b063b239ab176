#include "wittquant/polyring/ring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace wittquant::polyring {

std::optional<std::size_t> PolyRingDesc::var_slot(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

namespace {

void validate_vars(const std::vector<std::string>& vars) {
    if (vars.empty() || vars.size() > ExpKey::capacity)
        throw domain_error("PolyRingDesc: 1..8 variables supported");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
            throw domain_error("PolyRingDesc: variable names must start with a letter");
        if (!seen.insert(v).second) throw domain_error("PolyRingDesc: duplicate variable name");
    }
}

} // namespace

RingPtr make_ring(std::vector<std::string> vars, PModulus mod) {
    validate_vars(vars);
    auto d = std::make_shared<PolyRingDesc>();
    d->vars = std::move(vars);
    d->mod = mod;
    return d;
}

RingPtr make_symplectic_ring(std::vector<std::string> vars, PModulus mod, int pairing_sign) {
    validate_vars(vars);
    if (vars.size() % 2 != 0)
        throw domain_error("make_symplectic_ring: variables must come in (u_i, v_i) pairs");
    if (pairing_sign != 1 && pairing_sign != -1)
        throw domain_error("make_symplectic_ring: pairing sign must be +1 or -1");
    auto d = std::make_shared<PolyRingDesc>();
    d->vars = std::move(vars);
    d->mod = mod;
    d->symplectic = true;
    d->pairing_sign = pairing_sign;
    return d;
}

Polynomial Polynomial::constant(RingPtr ring, int64_t c) {
    Polynomial p(std::move(ring));
    p.add_term(ExpKey{}, c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name, uint16_t exp) {
    auto slot = ring->var_slot(name);
    if (!slot) throw domain_error("Polynomial::variable: unknown variable " + name);
    Polynomial p(std::move(ring));
    p.add_term(ExpKey::unit(*slot, exp), 1);
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const ExpKey& k, int64_t c) {
    for (std::size_t i = ring->nvars(); i < ExpKey::capacity; ++i)
        if (k.e[i] != 0) throw domain_error("Polynomial::monomial: exponent outside the ring");
    Polynomial p(std::move(ring));
    p.add_term(k, c);
    return p;
}

uint64_t Polynomial::coeff(const ExpKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const ExpKey& k, int64_t c) {
    if (!ring_) throw domain_error("Polynomial: detached from any ring");
    uint64_t cv = chainring::canon_mod(c, ring_->mod.pn);
    if (cv == 0) return;
    auto [it, inserted] = terms_.emplace(k, cv);
    if (!inserted) {
        it->second = chainring::add_mod(it->second, cv, ring_->mod.pn);
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_ring(*o.ring_))
        throw domain_error("Polynomial: ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, int64_t(c));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(k, int64_t(chainring::neg_mod(c, ring_->mod.pn)));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [k, c] : terms_) r.terms_[k] = chainring::neg_mod(c, ring_->mod.pn);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    const uint64_t pn = ring_->mod.pn;
    std::unordered_map<ExpKey, uint64_t, ExpKeyHash> acc;
    acc.reserve(terms_.size() * 2);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            uint64_t& slot = acc[ka.plus(kb)];
            slot = chainring::add_mod(slot, chainring::mul_mod(ca, cb, pn), pn);
        }
    Polynomial r(ring_);
    for (const auto& [k, c] : acc)
        if (c) r.terms_.emplace(k, c);
    return r;
}

Polynomial Polynomial::scaled(int64_t c) const {
    uint64_t cv = chainring::canon_mod(c, ring_->mod.pn);
    Polynomial r(ring_);
    if (cv == 0) return r;
    for (const auto& [k, v] : terms_) {
        uint64_t w = chainring::mul_mod(v, cv, ring_->mod.pn);
        if (w) r.terms_.emplace(k, w);
    }
    return r;
}

Polynomial Polynomial::pow(uint64_t e) const {
    Polynomial acc = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return acc;
}

Polynomial Polynomial::pth_power(uint32_t k) const {
    if (k == 0) return *this;
    const uint32_t p = ring_->mod.p;
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k; ++i) pk *= p;
    if (!ring_->is_char_p()) return pow(pk);
    // (sum c_m m)^(p^k) = sum c_m m^(p^k) over F_p, and c^p = c
    Polynomial r(ring_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key.scaled(uint32_t(pk)), c);
    return r;
}

Polynomial Polynomial::derivative(std::size_t slot) const {
    if (slot >= ring_->nvars()) throw domain_error("Polynomial::derivative: bad variable slot");
    Polynomial r(ring_);
    for (const auto& [key, c] : terms_) {
        if (key.e[slot] == 0) continue;
        uint64_t factor = key.e[slot] % ring_->mod.pn;
        uint64_t cv = chainring::mul_mod(c, factor, ring_->mod.pn);
        if (!cv) continue;
        ExpKey k2 = key;
        k2.e[slot] -= 1;
        r.terms_.emplace(k2, cv);
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    return ring_->same_ring(*o.ring_) && terms_ == o.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (key.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (key.e[i] > 1) mono += "^" + std::to_string(key.e[i]);
        }
        if (mono.empty()) out += std::to_string(c);
        else if (c == 1) out += mono;
        else out += std::to_string(c) + "*" + mono;
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    uint64_t number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("expected a number at position " + std::to_string(i));
        uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + uint64_t(s[i] - '0');
            if (v > (uint64_t(1) << 40)) throw parse_error("number literal too large");
            ++i;
        }
        return v;
    }
    /// Longest variable name of the ring starting here, if any.
    std::optional<std::size_t> variable(const PolyRingDesc& ring) {
        skip_ws();
        std::optional<std::size_t> best;
        std::size_t best_len = 0;
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            const auto& name = ring.vars[v];
            if (name.size() > best_len && s.compare(i, name.size(), name) == 0) {
                best = v;
                best_len = name.size();
            }
        }
        if (best) i += best_len;
        return best;
    }
};

} // namespace

Polynomial parse_polynomial(RingPtr ring, const std::string& text) {
    Lexer lx{text};
    Polynomial out(ring);
    bool any = false;
    do {
        // one term: optional leading coefficient, then factors
        uint64_t coeff = 1;
        bool saw_coeff = false, saw_factor = false;
        ExpKey key;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = lx.number();
            saw_coeff = true;
        }
        for (;;) {
            bool starred = lx.accept('*');
            auto slot = lx.variable(*ring);
            if (!slot) {
                if (starred) throw parse_error("dangling '*' in polynomial");
                break;
            }
            uint16_t e = 1;
            if (lx.accept('^')) {
                uint64_t n = lx.number();
                if (n > 0xffff) throw parse_error("exponent too large");
                e = uint16_t(n);
            }
            uint32_t s = uint32_t(key.e[*slot]) + e;
            if (s > 0xffff) throw parse_error("exponent too large");
            key.e[*slot] = uint16_t(s);
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor) throw parse_error("empty term in polynomial");
        out.add_term(key, int64_t(coeff % ring->mod.pn));
        any = true;
    } while (lx.accept('+'));
    if (!lx.eof()) throw parse_error("trailing input after polynomial");
    if (!any) throw parse_error("empty polynomial");
    return out;
}

} // namespace wittquant::polyring
