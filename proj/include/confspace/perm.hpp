#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace confspace {

/// Permutation of {1..k} in one-line notation. Composition is right to left:
/// (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  /// Identity of degree k.
  explicit Perm(int k);
  /// Images of 1..k; throws std::invalid_argument unless a bijection.
  static Perm from_images(std::vector<int> images);
  /// Product of disjoint or overlapping cycles, applied right to left.
  static Perm from_cycles(int k, const std::vector<std::vector<int>>& cycles);
  static Perm transposition(int k, int a, int b);
  /// Parses "2 3 1" (one-line) or "(1,2,3)(4,5)" (cycles, needs k).
  static Perm parse(const std::string& text, int k);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  /// Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles only
  long order() const;
  bool is_even() const;

  std::string one_line() const;
  std::string cycle_string() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

/// Conjugate c * p * c^{-1}.
Perm conjugate(const Perm& p, const Perm& c);

/// All permutations of degree k in lexicographic one-line order.
std::vector<Perm> all_perms(int k);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace confspace
