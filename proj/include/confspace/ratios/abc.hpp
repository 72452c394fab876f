#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/exec.hpp"
#include "confspace/ratios/vertex.hpp"

namespace confspace {

/// One relation a P + b Q + c R = 0 between pairwise coprime difference products.
struct AbcSolution {
  std::array<DiffProduct, 3> polys;  // scalar +1, nonnegative exponents
  std::array<BigInt, 3> coeffs;      // primitive, first nonzero positive
  std::string pattern;               // "simple" | "double" | "other"
};

struct AbcReport {
  int n = 0;
  int degree_bound = 0;
  long monomials = 0;
  long triples = 0;
  std::vector<AbcSolution> solutions;
  std::set<std::string> patterns;
  bool pass = false;  // no solution outside the simple/double patterns
};

/// Difference-product monomials prod (q_a - q_b)^{e_ab}, e_ab >= 0, of total
/// degree <= bound, in a fixed order (by degree, then exponents).
std::vector<DiffProduct> difference_monomials(int n, int degree_bound);

/// Exhaustive search over unordered pairwise coprime triples of difference
/// monomials, not all constant. Throws std::invalid_argument for n < 3 or
/// bound < 1, std::length_error when the search exceeds capacity.
AbcReport verify_abc(int n, int degree_bound, Exec exec = Exec::Parallel);

}  // namespace confspace
