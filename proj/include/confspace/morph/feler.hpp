#pragma once

#include <array>
#include <vector>

#include "confspace/binary_form.hpp"
#include "confspace/exec.hpp"
#include "confspace/multipoly.hpp"

namespace confspace {

/// L_1..L_6 in z1, z2, z3: the coefficients of p_6(t; L(z)) = t^6 + L_1 t^5 + .. + L_6.
std::vector<MultiPoly> feler_L();

/// d_3(z) = discriminant of t^3 + z1 t^2 + z2 t + z3.
MultiPoly feler_d3();

/// prod over cyclic (a, b, c) of ((x - y q_a)^3 (q_b - q_c)^2 - (x - y q_b)^3 (q_c - q_a)^2),
/// a degree-9 binary form in (x, y) over q1, q2, q3.
BinaryForm feler_nine_form();

/// (q1 - q2)(q2 - q3)(q3 - q1).
MultiPoly feler_vandermonde();

/// D_9 of the nine-form at each integer point (q1, q2, q3).
std::vector<BigInt> feler_nine_discriminants(const std::vector<std::array<BigInt, 3>>& points,
                                             Exec exec = Exec::Parallel);

/// 3^27 [(q1 - q2)(q2 - q3)(q3 - q1)]^56 at a point.
BigInt feler_nine_target(const std::array<BigInt, 3>& q);

/// 3^27 [(q1 - q2)(q2 - q3)(q3 - q1)]^56 expanded, homogeneous of degree 168.
MultiPoly feler_nine_target_expanded();

/// The discriminant of the nine-form expanded exactly: D_9 is homogeneous of degree
/// 168 in q, so it is recovered from its values at q3 = 1 on the grid
/// 0..168 x 0..168 by Newton interpolation, then rehomogenized.
MultiPoly feler_nine_discriminant_expanded(Exec exec = Exec::Parallel);

}  // namespace confspace
