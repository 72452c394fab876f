#include "confspace/ratios/punctured.hpp"

#include <stdexcept>

#include "confspace/ratios/complex.hpp"

namespace confspace {

BigRational PuncturedFunction::eval(const std::vector<BigRational>& q) const {
  std::vector<BigRational> pts = q;
  pts.emplace_back(0);
  pts.emplace_back(1);
  return product.eval(pts);
}

std::vector<PuncturedFunction> enumerate_punctured(int m) {
  if (m < 1) throw std::invalid_argument("need at least one free point");
  const int inf = m + 3;
  std::vector<PuncturedFunction> out;
  for (const auto& v : catalogue(m + 3, Family::CR)) {
    const DiffProduct full = as_diff_product(v);
    DiffProduct reduced;
    reduced.scalar = full.scalar;
    // every index occurs once upstairs and once downstairs, so the two
    // factors through infinity have opposite exponents and cancel
    for (const auto& [pair, e] : full.exps)
      if (pair.second != inf) reduced.exps[pair] = e;
    out.push_back({v, reduced});
  }
  return out;
}

}  // namespace confspace
