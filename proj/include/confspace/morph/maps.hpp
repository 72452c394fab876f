#pragma once

#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/multipoly.hpp"

namespace confspace {

enum class ModelKind { A, B };

/// Monic coefficients w_1..w_m of A_r(zeta) = t^m - zeta^r or B_r(zeta) = t^m - zeta^r t.
/// Throws std::invalid_argument for m < 2 or r < 0.
std::vector<MultiPoly> model_map(ModelKind kind, int m, int r, const MultiPoly& zeta);

/// Numeric version; negative r is allowed for zeta != 0.
std::vector<BigRational> model_map(ModelKind kind, int m, int r, const BigRational& zeta);

/// w_1..w_n with prod (t - q_i) = t^n + w_1 t^{n-1} + .. + w_n.
std::vector<BigRational> monic_from_roots(const std::vector<BigRational>& q);

/// d_n(Q) = d_n(w(Q)).
BigRational config_discriminant(const std::vector<BigRational>& q);

/// Q -> d_n(Q)^m Q, the covering of degree m n(n-1) + 1. Throws std::invalid_argument
/// for fewer than 2 points, repeated points or m < 0.
std::vector<BigRational> covering_point(const std::vector<BigRational>& q, int m);

long covering_degree(int n, int m);

/// d_n(lambda w_1, lambda^2 w_2, .., lambda^n w_n) in w1..wn and lambda.
MultiPoly scaled_discriminant(int n);

/// lambda^{n(n-1)} d_n(w).
MultiPoly scaled_discriminant_expected(int n);

}  // namespace confspace
