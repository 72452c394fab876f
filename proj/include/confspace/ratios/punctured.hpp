#pragma once

#include <vector>

#include "confspace/ratios/vertex.hpp"

namespace confspace {

/// A function C_o^m(C \ {0,1}) -> C \ {0,1}: the cross ratio `source` on
/// q_1..q_{m+3} with q_{m+1} = 0, q_{m+2} = 1, q_{m+3} = infinity. Factors
/// through infinity cancel and are dropped from `product`.
struct PuncturedFunction {
  RatioVertex source;
  DiffProduct product;  // over indices 1..m+2

  /// Value at (q_1..q_m); the pinned 0 and 1 are appended internally.
  BigRational eval(const std::vector<BigRational>& q) const;
};

/// Complete catalogue, 6 * C(m+3, 4) entries, ordered by source vertex.
/// Throws std::invalid_argument for m < 1.
std::vector<PuncturedFunction> enumerate_punctured(int m);

}  // namespace confspace
