#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "confspace/binary_form.hpp"
#include "confspace/multipoly.hpp"
#include "confspace/poly_matrix.hpp"

namespace confspace {

/// The (2n-1)x(2n-1) discriminant determinant layout for z_0 x^n + ... + z_n y^n:
/// n-1 shifted rows of (z_0..z_n) followed by n shifted rows of the
/// x-derivative coefficients (n z_0, (n-1) z_1, .., z_{n-1}). The entry in the
/// first column is 1 in the top row and n in the first derivative row, so the
/// determinant equals Res(f, f_x) / z_0 and is homogeneous of degree 2(n-1).
template <class T>
Matrix<T> discriminant_matrix(const std::vector<T>& z) {
  if (z.size() < 3) throw std::invalid_argument("discriminant needs degree n >= 2");
  const std::size_t n = z.size() - 1;
  const std::size_t size = 2 * n - 1;
  Matrix<T> m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) m(r, c) = T(0);
  }
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t i = 0; i <= n; ++i) m(r, r + i) = z[i];
  }
  m(0, 0) = T(1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      m(n - 1 + r, r + i) = z[i] * T(static_cast<long>(n - i));
    }
  }
  m(n - 1, 0) = T(static_cast<long>(n));
  return m;
}

/// D_n evaluated at the given coefficients (any exact ring).
template <class T>
T discriminant_of(const std::vector<T>& z) {
  return bareiss_det(discriminant_matrix(z));
}

/// d_n evaluated at the monic coefficients w_1..w_n.
template <class T>
T monic_discriminant_of(const std::vector<T>& w) {
  std::vector<T> z;
  z.reserve(w.size() + 1);
  z.push_back(T(1));
  z.insert(z.end(), w.begin(), w.end());
  return discriminant_of(z);
}

/// Sylvester matrix of f (degree m) and g (degree n), coefficients leading first.
template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& f, const std::vector<T>& g) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  Matrix<T> s(m + n, m + n);
  for (std::size_t r = 0; r < m + n; ++r) {
    for (std::size_t c = 0; c < m + n; ++c) s(r, c) = T(0);
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f[i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = g[i];
  }
  return s;
}

/// D_n(z) in variables z0..zn (symbolic). Throws for n < 2.
MultiPoly discriminant_projective(int n);

/// d_n(w) = D_n(1, w_1..w_n) in variables w1..wn (symbolic). Throws for n < 2.
MultiPoly discriminant_monic(int n);

/// Discriminant of a binary form with polynomial coefficients.
MultiPoly discriminant(const BinaryForm& f);

/// Sylvester resultant of two coefficient lists (leading coefficient first).
/// Throws std::invalid_argument on a zero polynomial or degree < 1.
MultiPoly resultant(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g);

/// Resultant of binary forms; zero iff they share a projective root.
MultiPoly resultant(const BinaryForm& f, const BinaryForm& g);

/// Monic polynomial t^n + w_1 t^{n-1} + .. + w_n as a coefficient list.
std::vector<MultiPoly> monic_coeffs(const std::vector<MultiPoly>& w);

}  // namespace confspace
