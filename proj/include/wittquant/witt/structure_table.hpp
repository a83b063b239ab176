#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wittquant/witt/int_poly.hpp"

namespace wittquant::witt {

/// Universal integer polynomials defining the length-m Witt ring.
///
/// Variable slots: a_1..a_m at 0..m-1 and b_1..b_m at m..2m-1 (public
/// surfaces are 1-indexed to match the component convention z_1..z_m).
/// S_k and M_k live in a,b; the Frobenius polynomials F_k in a alone.
/// All are obtained from the ghost recursion with exact division by p^k
/// at each stage; the ghost compatibility
///   w_k(S) = w_k(a) + w_k(b),  w_k(M) = w_k(a) * w_k(b)
/// is an integer-polynomial identity (checked in the test suite).
struct WittStructureTable {
    uint32_t p = 0;
    uint32_t length = 0;              // m
    std::vector<IntPoly> sum_polys;   // S_0..S_{m-1}
    std::vector<IntPoly> prod_polys;  // M_0..M_{m-1}
    std::vector<IntPoly> frob_polys;  // F_0..F_{m-2}; ghost-shifted Frobenius

    /// Ghost polynomial w_k (0-indexed k) in the variables starting at
    /// `offset`: sum over i <= k of p^i x_i^(p^(k-i)).
    static IntPoly ghost_poly(uint32_t p, uint32_t k, std::size_t offset);
};

/// Memoized per (p, m).  Guarded at m <= 4 and p <= 7 by default — the
/// degree-p^3 tables beyond that serve no desk-scale purpose; pass
/// relax_guard to lift the limit anyway.
const WittStructureTable& witt_structure_table(uint32_t p, uint32_t m,
                                               bool relax_guard = false);

} // namespace wittquant::witt
