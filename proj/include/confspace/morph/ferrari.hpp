#pragma once

#include <array>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/multipoly.hpp"
#include "confspace/perm.hpp"

namespace confspace {

/// (z_1, z_2, z_3) in formula order:
/// z_1 = (q1-q2-q3+q4)^2/4, z_2 = (q1-q2+q3-q4)^2/4, z_3 = (q1+q2-q3-q4)^2/4.
/// Throws std::invalid_argument unless q has 4 pairwise distinct entries.
std::array<BigRational, 3> ferrari_tuple(const std::vector<BigRational>& q);

/// The same values as a sorted set.
std::vector<BigRational> ferrari(const std::vector<BigRational>& q);

/// 4 z_1, 4 z_2, 4 z_3 as integer polynomials in q1..q4.
std::array<MultiPoly, 3> ferrari_scaled_symbolic();

/// (sigma q)_j = q_{sigma^{-1}(j)}; a left action of S(n) on tuples.
std::vector<BigRational> permute_points(const Perm& sigma, const std::vector<BigRational>& q);

/// The permutation rho in S(3) with ferrari_tuple(sigma q)_{rho(b)} = ferrari_tuple(q)_b,
/// read off the values at q. Throws std::domain_error if the tuples are not permutations
/// of each other.
Perm ferrari_induced(const Perm& sigma, const std::vector<BigRational>& q);

}  // namespace confspace
