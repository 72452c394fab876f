#pragma once

#include <array>
#include <optional>
#include <string>

#include "confspace/binary_form.hpp"
#include "confspace/morph/formal_sqrt.hpp"
#include "confspace/multipoly.hpp"

namespace confspace {

// Cubic forms are taken in binomial coordinates:
// phi = z0 x^3 + 3 z1 x^2 y + 3 z2 x y^2 + z3 y^3.

using Cubic = std::array<MultiPoly, 4>;

/// The symbols z0..z3.
Cubic cubic_symbols();

/// The form with binomial coordinates z.
BinaryForm binomial_cubic(const Cubic& z);

/// D = z0^2 z3^2 - 3 z1^2 z2^2 - 6 z0 z1 z2 z3 + 4 z0 z2^3 + 4 z1^3 z3
/// (equal to D_3 of the plain coefficients divided by 27).
MultiPoly eisenstein_discriminant(const Cubic& z);

/// w0 = 2z1^3 - 3z0z1z2 + z0^2z3, w1 = 2z0z2^2 - z0z1z3 - z1^2z2,
/// w2 = 2z1^2z3 - z0z2z3 - z1z2^2, w3 = 2z2^3 - 3z1z2z3 + z0z3^2.
Cubic eisenstein(const Cubic& z);

/// (1/2 dD/dz3, 1/6 dD/dz2, 1/6 dD/dz1, 1/2 dD/dz0) computed by differentiation.
Cubic eisenstein_from_derivatives();

/// Hessian phi_xx phi_yy - phi_xy^2 of a binary form of degree >= 2; throws
/// std::domain_error when it vanishes identically.
BinaryForm hessian(const BinaryForm& f);

/// J = phi_x psi_y - phi_y psi_x with psi the Hessian. Throws std::invalid_argument
/// unless f is cubic, std::domain_error when J vanishes identically (triple root).
BinaryForm cayley_eisenstein(const BinaryForm& f);

/// J(phi) = scalar * (E phi) after a coordinate change of (x, y).
struct CayleyRelation {
  BigRational scalar;
  std::string transform;  // "identity", "y->-y", "x->-x", "x<->y", "x<->-y"
};

/// Compares the Cayley and Eisenstein images of the generic cubic symbolically.
std::optional<CayleyRelation> cayley_relation();

/// T(Q) = (a zeta + b)/(c zeta + d) with a = (z1z2 - z0z3)/sqrt(-D),
/// b = 2(z2^2 - z1z3)/sqrt(-D), c = 2(z0z2 - z1^2)/sqrt(-D), d = -a, each
/// stored as (X sqrt(-D)) / (-D). Throws std::domain_error when D is zero.
MoebiusMap tame_eisenstein(const Cubic& z);

/// Outcome of the floating-point action check at one rational point.
struct TameActionCheck {
  bool usable = false;   // nondegenerate and well conditioned
  bool matched = false;  // the image root set equals the target root set
  double max_error = 0;  // largest relative distance in the matching
};

/// Roots of phi(zeta, 1) are moved by T(Q) onto the roots of the Cayley form
/// J(zeta, 1), i.e. the negated roots of (E phi)(zeta, 1). Points with z0 = 0,
/// w0 = 0 or |D| below 1e-6 of the coefficient scale are reported unusable.
TameActionCheck tame_action_check(const std::array<BigRational, 4>& z, double tolerance = 1e-9);

}  // namespace confspace
