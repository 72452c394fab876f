#include "confspace/binary_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace confspace {

BinaryForm::BinaryForm(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& c) { return c.is_zero(); })) {
    throw std::invalid_argument("binary form with all-zero coefficients");
  }
}

BinaryForm BinaryForm::from_polynomial(const MultiPoly& p, int degree, const std::string& x,
                                       const std::string& y) {
  std::vector<MultiPoly> coeffs;
  MultiPoly rebuilt;
  for (int i = 0; i <= degree; ++i) {
    auto c = p.coefficient(x, static_cast<std::uint32_t>(degree - i))
                 .coefficient(y, static_cast<std::uint32_t>(i));
    coeffs.push_back(c);
  }
  BinaryForm f(std::move(coeffs));
  if (f.as_polynomial(x, y) != p) {
    throw std::invalid_argument("polynomial is not a binary form of degree " + std::to_string(degree));
  }
  return f;
}

MultiPoly BinaryForm::as_polynomial(const std::string& x, const std::string& y) const {
  const auto n = static_cast<std::uint32_t>(degree());
  MultiPoly out;
  for (std::uint32_t i = 0; i <= n; ++i) {
    out += coeffs_[i] * MultiPoly::monomial(1, {{x, n - i}, {y, i}});
  }
  return out;
}

}  // namespace confspace
