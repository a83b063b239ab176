#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

#include "wittquant/errors.hpp"

namespace wittquant {

/// Exponent vector of a monomial, fixed capacity of 8 variable slots
/// (covers 2m Witt slots for m <= 4 and 2r symplectic pairs for r <= 4).
/// Unused slots stay zero, so total degree and comparisons ignore them.
struct ExpKey {
    static constexpr std::size_t capacity = 8;
    std::array<uint16_t, capacity> e{};

    friend bool operator==(const ExpKey&, const ExpKey&) = default;
    friend auto operator<=>(const ExpKey&, const ExpKey&) = default;

    uint32_t degree() const {
        uint32_t d = 0;
        for (auto x : e) d += x;
        return d;
    }

    ExpKey plus(const ExpKey& o) const {
        ExpKey r;
        for (std::size_t i = 0; i < capacity; ++i) {
            uint32_t s = uint32_t(e[i]) + o.e[i];
            if (s > 0xffff) throw internal_error("ExpKey: exponent overflow");
            r.e[i] = uint16_t(s);
        }
        return r;
    }

    /// Componentwise difference; caller guarantees divisibility.
    ExpKey minus(const ExpKey& o) const {
        ExpKey r;
        for (std::size_t i = 0; i < capacity; ++i) {
            if (e[i] < o.e[i]) throw internal_error("ExpKey: negative exponent");
            r.e[i] = uint16_t(e[i] - o.e[i]);
        }
        return r;
    }

    /// Every exponent multiplied by k (monomial k-th power).
    ExpKey scaled(uint32_t k) const {
        ExpKey r;
        for (std::size_t i = 0; i < capacity; ++i) {
            uint32_t s = uint32_t(e[i]) * k;
            if (s > 0xffff) throw internal_error("ExpKey: exponent overflow");
            r.e[i] = uint16_t(s);
        }
        return r;
    }

    bool divides(const ExpKey& o) const {
        for (std::size_t i = 0; i < capacity; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    bool divisible_by(uint32_t k) const {
        for (auto x : e)
            if (x % k != 0) return false;
        return true;
    }

    ExpKey divided_exponents(uint32_t k) const {
        ExpKey r;
        for (std::size_t i = 0; i < capacity; ++i) r.e[i] = uint16_t(e[i] / k);
        return r;
    }

    static ExpKey unit(std::size_t slot, uint16_t exp = 1) {
        ExpKey r;
        r.e[slot] = exp;
        return r;
    }
};

/// Canonical term order used for storage, printing and coordinate
/// indexing: total degree descending, ties broken by lexicographically
/// larger exponent tuple first.  With slots (x, y) this reads
/// x^3*y^3 + 2*x*y + 6.
struct GradedLexDesc {
    bool operator()(const ExpKey& a, const ExpKey& b) const {
        uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

struct ExpKeyHash {
    std::size_t operator()(const ExpKey& k) const {
        // FNV-1a over the four 16-bit pairs
        uint64_t h = 14695981039346656037ull;
        for (auto x : k.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return std::size_t(h);
    }
};

/// All monomials in `nvars` variables of total degree <= d, sorted by
/// GradedLexDesc.  This fixes the coordinate order of every matrix built
/// over a monomial window: high degree first, so restricting a span to a
/// lower-degree window is a trailing column block.
std::vector<ExpKey> monomials_up_to_degree(std::size_t nvars, uint32_t d);

} // namespace wittquant
