#include "confspace/discriminant.hpp"

#include <algorithm>

namespace confspace {

namespace {

std::vector<MultiPoly> symbols(const std::vector<std::string>& names) {
  std::vector<MultiPoly> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(MultiPoly::variable(n));
  return out;
}

void check_degree(int n) {
  if (n < 2) throw std::invalid_argument("unsupported degree " + std::to_string(n) + " (need n >= 2)");
}

void check_nonzero(const std::vector<MultiPoly>& f, const char* which) {
  if (f.size() < 2) {
    throw std::invalid_argument(std::string("resultant: ") + which + " has degree < 1");
  }
  if (std::all_of(f.begin(), f.end(), [](const MultiPoly& p) { return p.is_zero(); })) {
    throw std::invalid_argument(std::string("resultant: ") + which + " is the zero polynomial");
  }
}

}  // namespace

MultiPoly discriminant_projective(int n) {
  check_degree(n);
  return discriminant_of(symbols(indexed_names("z", 0, n)));
}

MultiPoly discriminant_monic(int n) {
  check_degree(n);
  return monic_discriminant_of(symbols(indexed_names("w", 1, n)));
}

MultiPoly discriminant(const BinaryForm& f) {
  check_degree(f.degree());
  return discriminant_of(f.coeffs());
}

MultiPoly resultant(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g) {
  check_nonzero(f, "first argument");
  check_nonzero(g, "second argument");
  return bareiss_det(sylvester_matrix(f, g));
}

MultiPoly resultant(const BinaryForm& f, const BinaryForm& g) {
  return resultant(f.coeffs(), g.coeffs());
}

std::vector<MultiPoly> monic_coeffs(const std::vector<MultiPoly>& w) {
  std::vector<MultiPoly> c{MultiPoly(1)};
  c.insert(c.end(), w.begin(), w.end());
  return c;
}

}  // namespace confspace
