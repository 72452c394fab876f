#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/perm.hpp"

namespace confspace {

enum class RatioKind { SR, CR };

/// sr_ijk = (q_k - q_i)/(q_k - q_j) or cr_ijkl = (q_l - q_i)(q_j - q_k) / ((q_l - q_j)(q_i - q_k)).
/// Cross ratios are stored as the smallest tuple of their Klein orbit
/// {(i,j,k,l), (j,i,l,k), (k,l,i,j), (l,k,j,i)}.
class RatioVertex {
 public:
  static RatioVertex sr(int i, int j, int k);
  static RatioVertex cr(int i, int j, int k, int l);

  RatioKind kind() const { return kind_; }
  int arity() const { return kind_ == RatioKind::SR ? 3 : 4; }
  int operator[](int p) const { return ix_[static_cast<std::size_t>(p)]; }
  /// The four tuples naming the same cross ratio (the single tuple for sr).
  std::array<std::array<int, 4>, 4> klein_orbit() const;
  int max_index() const;
  std::string to_string() const;  // "sr_3,2,1"

  friend bool operator==(const RatioVertex&, const RatioVertex&) = default;
  friend auto operator<=>(const RatioVertex&, const RatioVertex&) = default;

 private:
  RatioKind kind_ = RatioKind::SR;
  std::array<int, 4> ix_{};  // unused slot is 0 for sr
};

/// scalar * prod (q_a - q_b)^{e_ab} over pairs a < b.
struct DiffProduct {
  int scalar = 1;
  std::map<std::pair<int, int>, int> exps;

  /// Multiplies in (q_a - q_b)^e with any orientation of a, b.
  void add_factor(int a, int b, int e);
  DiffProduct inverse() const;
  int degree() const;  // sum of exponents
  /// Value at exact points q_1..q_n (index 1 = values[0]).
  BigRational eval(const std::vector<BigRational>& values) const;
  std::string to_string() const;

  friend DiffProduct operator*(const DiffProduct& a, const DiffProduct& b);
  friend bool operator==(const DiffProduct&, const DiffProduct&) = default;
  friend auto operator<=>(const DiffProduct&, const DiffProduct&) = default;
};

DiffProduct as_diff_product(const RatioVertex& v);

/// The vertex of lambda^{-1}: sr_ijk -> sr_jik, cr_ijkl -> cr_jikl.
RatioVertex involution(const RatioVertex& v);

/// Relabels indices x -> sigma(x) and re-canonicalizes.
RatioVertex act(const Perm& sigma, const RatioVertex& v);

/// Throws std::invalid_argument unless indices are distinct and in 1..n.
void validate(const RatioVertex& v, int n);

}  // namespace confspace
