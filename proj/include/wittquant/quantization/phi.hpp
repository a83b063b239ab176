#pragma once

#include "wittquant/polyring/handle.hpp"
#include "wittquant/polyring/poisson.hpp"
#include "wittquant/quantization/algebra.hpp"
#include "wittquant/witt/witt_vector.hpp"

namespace wittquant::quantization {

using polyring::Polynomial;
using polyring::PolyRingHandle;
using polyring::RingPtr;

/// Z_1 = Z(A/pA) = F_p[x_1^p, ..., y_r^p] as a symplectic polynomial ring
/// in coordinates u_i = x_i^p, v_i = y_i^p with the default orientation
/// {u_i, v_i} = +1.
RingPtr center_ring(const AlgebraPtr& alg, int pairing_sign = +1);

/// Canonical lift Z_1 -> A at the given level: u_i^a v_i^b goes to
/// x_i^(pa) y_i^(pb) with the same canonical coefficients.
WeylElement lift_center(const AlgebraPtr& alg, uint32_t level, const Polynomial& f);

/// Inverse of lift_center on level-1 elements of the center: every
/// exponent must be divisible by p.
Polynomial project_to_center(const WeylElement& e, const RingPtr& z1);

/// Whether a level-1 element lies in Z(A_1) = F_p[x^p, y^p] (all
/// exponents divisible by p).
bool is_central_mod_p(const WeylElement& e);

/// The center map of a length-m Witt vector over Z_1:
///   phi_m(z_1, ..., z_m) = sum over i of p^(i-1) * lift(z_i)^(p^(m-i))
/// at level m <= n.  The image is central in A_m; that invariant is
/// asserted on every call.
WeylElement phi_map(const AlgebraPtr& alg, const witt::WittVector<PolyRingHandle>& z, uint32_t m);

/// {a, b} = (1/p)[a~, b~] mod p for a, b central at level 1, expressed in
/// the Z_1 coordinates u = x^p, v = y^p.  Needs n >= 2.  Independent of
/// the choice of lifts.
Polynomial deformation_bracket(const AlgebraPtr& alg, const RingPtr& z1, const WeylElement& a,
                               const WeylElement& b);

/// Right-hand side of the derivation identity for x = phi_m(z):
///   sum over i of z_i^(p^(m-i) - 1) {z_i, w}.
Polynomial eq1_rhs(const witt::WittVector<PolyRingHandle>& z, const Polynomial& w);

} // namespace wittquant::quantization
