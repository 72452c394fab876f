#pragma once

#include <string>
#include <vector>

#include "confspace/multipoly.hpp"

namespace confspace {

/// Degree-n binary form sum_i c_i x^{n-i} y^i with polynomial coefficients.
class BinaryForm {
 public:
  /// Throws std::invalid_argument if coeffs is empty or all zero.
  explicit BinaryForm(std::vector<MultiPoly> coeffs);

  /// Reads the coefficients of x^{n-i} y^i off a polynomial homogeneous in (x, y).
  static BinaryForm from_polynomial(const MultiPoly& p, int degree, const std::string& x = "x",
                                    const std::string& y = "y");

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  const MultiPoly& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  MultiPoly as_polynomial(const std::string& x = "x", const std::string& y = "y") const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<MultiPoly> coeffs_;
};

}  // namespace confspace
