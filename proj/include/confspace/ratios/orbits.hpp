#pragma once

#include <utility>
#include <vector>

#include "confspace/perm.hpp"
#include "confspace/ratios/complex.hpp"

namespace confspace {

/// {sr_{3,2,1}, .., sr_{m+3,2,1}}: common denominator q_1 - q_2.
Simplex delta_S(int m);
/// {sr_{2,3,1}, .., sr_{2,m+3,1}}: common numerator q_1 - q_2.
Simplex delta_S_inverse(int m);
/// {cr_{1,2,3,4}, .., cr_{1,2,3,m+4}}.
Simplex delta_C(int m);

struct NormalForm {
  Perm sigma;       // act(sigma, s) == canonical
  Simplex canonical;
};

/// Carries a pure simplex on q_1..q_n to its normal form by the constructive
/// reduction (fix the first vertex, then the second, then the tail). Falls
/// back to an exhaustive search over S(n) when n <= 7. Throws
/// std::invalid_argument for mixed simplices.
NormalForm normal_form(const Simplex& s, int n);

/// Exhaustive search over S(n) for the normal form; n <= 8.
NormalForm normal_form_exhaustive(const Simplex& s, int n);

struct Orbit {
  Simplex representative;  // smallest member
  long size = 0;
};

/// S(n)-orbits of m-simplices of the pure complex, sorted by representative.
/// Throws std::invalid_argument for the L family or m above the dimension.
std::vector<Orbit> orbit_decomposition(int n, Family family, int m);

/// Same on an already built complex.
std::vector<Orbit> orbit_decomposition(const RatioComplex& c, int m);

}  // namespace confspace
