#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittquant/chainring/modulus.hpp"
#include "wittquant/chainring/scalar.hpp"
#include "wittquant/expkey.hpp"

namespace wittquant::polyring {

using chainring::PModulus;

/// A sparse multivariate polynomial ring over Z/p^n (F_p when n = 1),
/// at most 8 named variables.  When the ring plays the role of a
/// symplectic coordinate ring, variables come in consecutive pairs
/// (u_1, v_1, u_2, v_2, ...) with {u_i, v_i} = pairing_sign.
struct PolyRingDesc {
    std::vector<std::string> vars;
    PModulus mod;
    bool symplectic = false;
    int pairing_sign = +1;

    std::size_t nvars() const { return vars.size(); }
    bool is_char_p() const { return mod.n == 1; }
    std::optional<std::size_t> var_slot(const std::string& name) const;

    bool same_ring(const PolyRingDesc& o) const {
        return vars == o.vars && mod == o.mod;
    }
};

using RingPtr = std::shared_ptr<const PolyRingDesc>;

RingPtr make_ring(std::vector<std::string> vars, PModulus mod);
/// Pairs must come interleaved: {u1, v1, u2, v2, ...}.
RingPtr make_symplectic_ring(std::vector<std::string> vars, PModulus mod, int pairing_sign = +1);

class Polynomial {
public:
    using Terms = std::map<ExpKey, uint64_t, GradedLexDesc>;

    Polynomial() = default; // detached zero; give it a ring before use
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    static Polynomial constant(RingPtr ring, int64_t c);
    static Polynomial variable(RingPtr ring, const std::string& name, uint16_t exp = 1);
    static Polynomial monomial(RingPtr ring, const ExpKey& k, int64_t c = 1);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    uint32_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
    uint64_t coeff(const ExpKey& k) const;
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExpKey& k, int64_t c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(int64_t c) const;
    Polynomial pow(uint64_t e) const;

    /// f^(p^k); over F_p this is the freshman's-dream exponent scaling.
    Polynomial pth_power(uint32_t k) const;

    /// Partial derivative with respect to a variable slot.
    Polynomial derivative(std::size_t slot) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void require_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    Terms terms_;
};

/// Parse the polynomial grammar
///   poly   := term ('+' term)*
///   term   := coeff '*' factor ('*' factor)* | factor+ | coeff
///   factor := var ('^' nat)?
/// against the ring's variable set.  Round-trips str() bit-exactly.
Polynomial parse_polynomial(RingPtr ring, const std::string& text);

} // namespace wittquant::polyring
