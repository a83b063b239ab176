#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "wittquant/expkey.hpp"

namespace wittquant::witt {

/// Sparse multivariate polynomial with integer (mpz) coefficients.
/// Backs the universal Witt structure polynomials and the torsion-free
/// ghost oracle; coefficient growth there (binomials of p^3-th powers)
/// rules out machine integers.
class IntPoly {
public:
    using Terms = std::map<ExpKey, mpz_class, GradedLexDesc>;

    IntPoly() = default;
    explicit IntPoly(const mpz_class& c);
    explicit IntPoly(long c) : IntPoly(mpz_class(c)) {}
    static IntPoly variable(std::size_t slot, uint16_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    const mpz_class& coeff(const ExpKey& k) const;
    uint32_t degree() const; // 0 for the zero polynomial

    void add_term(const ExpKey& k, const mpz_class& c);

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow(uint64_t e) const;

    IntPoly scaled(const mpz_class& c) const;

    /// Divide every coefficient by d; throws internal_error unless exact.
    IntPoly divexact(const mpz_class& d) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    Terms terms_;
};

} // namespace wittquant::witt
