#pragma once

#include <string>

#include "confspace/multipoly.hpp"

namespace confspace {

/// u + v * sqrt(base) with polynomial u, v and the rule sqrt(base)^2 = base.
/// Arithmetic between elements over different radicands throws std::invalid_argument.
class FormalSqrt {
 public:
  explicit FormalSqrt(MultiPoly base, MultiPoly u = MultiPoly(), MultiPoly v = MultiPoly());

  /// The adjoined root itself: 0 + 1 * sqrt(base).
  static FormalSqrt root(const MultiPoly& base) { return FormalSqrt(base, MultiPoly(), MultiPoly(1)); }

  const MultiPoly& base() const { return base_; }
  const MultiPoly& rational_part() const { return u_; }
  const MultiPoly& root_part() const { return v_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  FormalSqrt conjugate() const { return FormalSqrt(base_, u_, -v_); }
  /// u^2 - v^2 base, the product with the conjugate.
  MultiPoly norm() const;

  FormalSqrt operator-() const { return FormalSqrt(base_, -u_, -v_); }
  friend FormalSqrt operator+(const FormalSqrt& a, const FormalSqrt& b);
  friend FormalSqrt operator-(const FormalSqrt& a, const FormalSqrt& b);
  friend FormalSqrt operator*(const FormalSqrt& a, const FormalSqrt& b);
  friend FormalSqrt operator*(const FormalSqrt& a, const MultiPoly& s);
  friend bool operator==(const FormalSqrt& a, const FormalSqrt& b);

  std::string to_string() const;

 private:
  MultiPoly base_;
  MultiPoly u_;
  MultiPoly v_;
};

/// numerator / denominator with a FormalSqrt numerator and a nonzero polynomial denominator.
class QuadFraction {
 public:
  QuadFraction(FormalSqrt num, MultiPoly den);

  const FormalSqrt& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  QuadFraction operator-() const { return QuadFraction(-num_, den_); }
  friend QuadFraction operator+(const QuadFraction& a, const QuadFraction& b);
  friend QuadFraction operator-(const QuadFraction& a, const QuadFraction& b);
  friend QuadFraction operator*(const QuadFraction& a, const QuadFraction& b);
  /// Cross-multiplied comparison, so equal values in different forms compare equal.
  friend bool operator==(const QuadFraction& a, const QuadFraction& b);

  bool is_one() const;

 private:
  FormalSqrt num_;
  MultiPoly den_;
};

/// zeta -> (a zeta + b) / (c zeta + d).
struct MoebiusMap {
  QuadFraction a, b, c, d;

  QuadFraction determinant() const { return a * d - b * c; }
};

}  // namespace confspace
