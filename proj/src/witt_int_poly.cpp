#include "wittquant/witt/int_poly.hpp"

#include <unordered_map>

namespace wittquant::witt {

IntPoly::IntPoly(const mpz_class& c) {
    if (c != 0) terms_[ExpKey{}] = c;
}

IntPoly IntPoly::variable(std::size_t slot, uint16_t exp) {
    IntPoly p;
    if (exp > 0) p.terms_[ExpKey::unit(slot, exp)] = 1;
    else p.terms_[ExpKey{}] = 1;
    return p;
}

const mpz_class& IntPoly::coeff(const ExpKey& k) const {
    static const mpz_class zero = 0;
    auto it = terms_.find(k);
    return it == terms_.end() ? zero : it->second;
}

uint32_t IntPoly::degree() const {
    // terms are graded-descending, so the first key carries the degree
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void IntPoly::add_term(const ExpKey& k, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    std::unordered_map<ExpKey, mpz_class, ExpKeyHash> acc;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) acc[ka.plus(kb)] += ca * cb;
    IntPoly r;
    for (auto& [k, c] : acc)
        if (c != 0) r.terms_.emplace(k, std::move(c));
    return r;
}

IntPoly IntPoly::pow(uint64_t e) const {
    IntPoly acc(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
        if (e == 0) break;
    }
    return acc;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
    IntPoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

IntPoly IntPoly::divexact(const mpz_class& d) const {
    IntPoly r;
    for (const auto& [k, v] : terms_) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        if (rem != 0)
            throw internal_error("IntPoly::divexact: inexact division in structure recursion");
        r.terms_[k] = std::move(q);
    }
    return r;
}

std::string IntPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        mpz_class a = c;
        if (!first) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < var_names.size() && i < ExpKey::capacity; ++i) {
            if (k.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names[i];
            if (k.e[i] > 1) mono += "^" + std::to_string(k.e[i]);
        }
        if (mono.empty()) out += a.get_str();
        else if (a == 1) out += mono;
        else if (a == -1) out += "-" + mono;
        else out += a.get_str() + "*" + mono;
    }
    return out;
}

} // namespace wittquant::witt
