#include "wittquant/polyring/forms.hpp"

#include <algorithm>
#include <cctype>

namespace wittquant::polyring {

Polynomial OneForm::coefficient(std::size_t slot) const {
    auto it = coeffs_.find(slot);
    return it == coeffs_.end() ? Polynomial(ring_) : it->second;
}

void OneForm::set_coefficient(std::size_t slot, Polynomial f) {
    if (slot >= ring_->nvars()) throw domain_error("OneForm: bad variable slot");
    if (f.is_zero()) coeffs_.erase(slot);
    else coeffs_[slot] = std::move(f);
}

void OneForm::add_to_coefficient(std::size_t slot, const Polynomial& f) {
    set_coefficient(slot, coefficient(slot) + f);
}

OneForm OneForm::operator+(const OneForm& o) const {
    OneForm r = *this;
    for (const auto& [slot, f] : o.coeffs_) r.add_to_coefficient(slot, f);
    return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
    OneForm r = *this;
    for (const auto& [slot, f] : o.coeffs_) r.add_to_coefficient(slot, -f);
    return r;
}

OneForm OneForm::scaled_by(const Polynomial& g) const {
    OneForm r(ring_);
    for (const auto& [slot, f] : coeffs_) r.set_coefficient(slot, f * g);
    return r;
}

bool OneForm::operator==(const OneForm& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (const auto& [slot, f] : coeffs_) {
        auto it = o.coeffs_.find(slot);
        if (it == o.coeffs_.end() || !(it->second == f)) return false;
    }
    return true;
}

std::string OneForm::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [slot, f] : coeffs_) {
        if (!first) out += " + ";
        first = false;
        if (f.term_count() == 1 && f.terms().begin()->first == ExpKey{}) {
            out += std::to_string(f.terms().begin()->second) + "*d(" + ring_->vars[slot] + ")";
        } else {
            out += "(" + f.str() + ")*d(" + ring_->vars[slot] + ")";
        }
    }
    return out;
}

OneForm parse_one_form(RingPtr ring, const std::string& text) {
    OneForm w(ring);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '0') {
        ++i;
        skip_ws();
        if (i >= text.size()) return w;
        throw parse_error("unexpected input after zero one-form");
    }
    for (;;) {
        skip_ws();
        std::string coeff_text;
        if (i < text.size() && text[i] == '(') {
            std::size_t depth = 1, j = i + 1;
            while (j < text.size() && depth > 0) {
                if (text[j] == '(') ++depth;
                if (text[j] == ')') --depth;
                ++j;
            }
            if (depth != 0) throw parse_error("unbalanced parentheses in one-form");
            coeff_text = text.substr(i + 1, j - i - 2);
            i = j;
            skip_ws();
            if (text.compare(i, 1, "*") != 0) throw parse_error("expected '*' before d(...)");
            ++i;
        } else {
            // bare coefficient up to "*d("
            std::size_t j = text.find("*d(", i);
            if (j == std::string::npos) throw parse_error("expected coefficient*d(var)");
            coeff_text = text.substr(i, j - i);
            i = j + 1;
        }
        skip_ws();
        if (text.compare(i, 2, "d(") != 0) throw parse_error("expected d(var)");
        i += 2;
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw parse_error("expected ')' after variable");
        std::string var = text.substr(i, close - i);
        i = close + 1;
        auto slot = ring->var_slot(var);
        if (!slot) throw parse_error("unknown variable in d(...): " + var);
        w.add_to_coefficient(*slot, parse_polynomial(ring, coeff_text));
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw parse_error("expected '+' between one-form terms");
        ++i;
    }
    return w;
}

OneForm exterior_d(const Polynomial& f) {
    OneForm w(f.ring());
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) w.set_coefficient(v, f.derivative(v));
    return w;
}

bool one_form_is_closed(const OneForm& w) {
    const auto& ring = w.ring();
    for (std::size_t j = 0; j < ring->nvars(); ++j)
        for (std::size_t k = j + 1; k < ring->nvars(); ++k)
            if (!(w.coefficient(j).derivative(k) == w.coefficient(k).derivative(j))) return false;
    return true;
}

OneForm cartier_inverse(RingPtr ring,
                        const std::vector<std::pair<Polynomial, Polynomial>>& pres) {
    if (!ring->is_char_p())
        throw domain_error("cartier_inverse: requires characteristic p (length-1 modulus)");
    const uint32_t p = ring->mod.p;
    OneForm out(ring);
    for (const auto& [f, g] : pres) {
        Polynomial factor = f.pth_power(1) * g.pow(p - 1);
        OneForm dg = exterior_d(g);
        out = out + dg.scaled_by(factor);
    }
    return out;
}

OneForm fd_composite(const std::vector<Polynomial>& components, uint32_t n) {
    if (components.size() != n) throw domain_error("fd_composite: length mismatch");
    if (n == 0) throw domain_error("fd_composite: empty Witt vector");
    const auto& ring = components.front().ring();
    if (!ring->is_char_p()) throw domain_error("fd_composite: requires characteristic p");
    const uint32_t p = ring->mod.p;
    OneForm out(ring);
    for (uint32_t i = 1; i <= n; ++i) {
        uint64_t exp = 1;
        for (uint32_t j = i; j < n; ++j) exp *= p; // p^(n-i)
        Polynomial factor = components[i - 1].pow(exp - 1);
        out = out + exterior_d(components[i - 1]).scaled_by(factor);
    }
    return out;
}

QuotientFormSpace::QuotientFormSpace(QuotientRing q, std::optional<uint32_t> degree_cap)
    : quotient(std::move(q)), basis(quotient.basis_monomials(degree_cap)) {
    for (uint32_t i = 0; i < basis.size(); ++i) basis_index.emplace(basis[i], i);
}

std::vector<std::pair<uint32_t, uint64_t>>
QuotientFormSpace::coordinates(const OneForm& w) const {
    std::vector<std::pair<uint32_t, uint64_t>> out;
    const std::size_t nv = quotient.base->nvars();
    for (const auto& [slot, f] : w.coefficients()) {
        Polynomial nf = quotient.nf(f);
        for (const auto& [k, c] : nf.terms()) {
            auto it = basis_index.find(k);
            if (it == basis_index.end())
                throw domain_error("QuotientFormSpace: coefficient leaves the basis window");
            out.emplace_back(uint32_t(it->second * nv + slot), c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wittquant::polyring
