#pragma once

#include <string>
#include <vector>

#include "confspace/perm.hpp"

namespace confspace {

/// Word in sigma_1..sigma_{n-1}; letter g stands for sigma_{|g|}^{sign g}.
class BraidWord {
 public:
  /// Throws std::invalid_argument for n < 2 or a letter outside +-1..+-(n-1).
  BraidWord(int n, std::vector<int> letters = {});
  /// Whitespace-separated signed integers, e.g. "1 2 -1".
  static BraidWord parse(int n, const std::string& text);

  /// alpha = sigma_1 .. sigma_{n-1}
  static BraidWord alpha(int n);
  /// s = sigma_1 .. sigma_{n-1} sigma_{n-1} .. sigma_1 (kernel generator for the sphere)
  static BraidWord sphere_relator(int n);
  /// c = alpha^n, generator of the centre
  static BraidWord centre(int n);

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  BraidWord inverse() const;
  BraidWord pow(int e) const;
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<int> letters_;
};

/// Image under the standard epimorphism sigma_i -> (i, i+1).
Perm mu_image(const BraidWord& w);

long exponent_sum(const BraidWord& w);

/// Left normal form Delta^infimum * A_1 .. A_r with permutation-braid factors,
/// A_1 != Delta, A_r != 1, every adjacent pair left-weighted.
struct CanonicalBraid {
  int n = 0;
  long infimum = 0;
  std::vector<Perm> factors;
  friend bool operator==(const CanonicalBraid&, const CanonicalBraid&) = default;
};

CanonicalBraid canonical_form(const BraidWord& w);

/// Word problem in B_n. Throws std::invalid_argument on mismatched strand counts.
bool words_equal(const BraidWord& a, const BraidWord& b);

}  // namespace confspace
