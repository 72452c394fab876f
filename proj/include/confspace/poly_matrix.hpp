#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/multipoly.hpp"

namespace confspace {

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::vector<std::vector<T>> rows) {  // NOLINT(google-explicit-constructor)
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      for (auto& v : r) data_.push_back(std::move(v));
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool ring_is_zero(const BigInt& v) { return v == 0; }
inline bool ring_is_zero(const BigRational& v) { return v == 0; }

inline MultiPoly ring_exact_div(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::exact_div(a, b);
}
inline BigInt ring_exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline BigRational ring_exact_div(const BigRational& a, const BigRational& b) { return a / b; }

}  // namespace detail

/// Fraction-free (Bareiss) determinant. Every intermediate division is exact,
/// so no fractions appear for polynomial or integer entries.
template <class T>
T bareiss_det(Matrix<T> m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::ring_is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && detail::ring_is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = detail::ring_exact_div(num, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace confspace
