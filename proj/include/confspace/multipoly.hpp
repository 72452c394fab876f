#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confspace/bigint.hpp"

namespace confspace {

using Monomial = std::vector<std::uint32_t>;

struct Term {
  Monomial exps;  // aligned with MultiPoly::variables()
  BigInt coeff;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// The variable list holds exactly the variables that occur, sorted by name.
/// Terms are kept in descending graded-lexicographic order (total degree
/// first, then exponents compared in variable order), so two equal
/// polynomials have identical representations.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::string_view name);
  static MultiPoly monomial(const BigInt& coeff,
                            const std::map<std::string, std::uint32_t>& exps);
  /// Builds from possibly unsorted, duplicated or zero terms.
  static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Constant coefficient value; throws if the polynomial is not constant.
  BigInt constant_value() const;

  int total_degree() const;  // -1 for zero
  std::uint32_t degree_in(std::string_view var) const;
  /// True iff every term has total degree d (zero polynomial counts).
  bool is_homogeneous(int d) const;
  /// Weighted homogeneity; unlisted variables weigh 0.
  bool is_weighted_homogeneous(const std::map<std::string, int>& weights, long w) const;

  const Term& leading_term() const { return terms_.front(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    }
    return true;
  }

  MultiPoly scaled(const BigInt& c) const;
  MultiPoly pow(unsigned e) const;

  /// Exact quotient a / b; throws std::domain_error if b does not divide a.
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
  /// Divides every coefficient by c; throws if some coefficient is not divisible.
  MultiPoly divided_by(const BigInt& c) const;

  MultiPoly derivative(std::string_view var) const;
  /// Replaces variables by polynomials; unmapped variables stay.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;
  /// Coefficient of var^e as a polynomial in the remaining variables.
  MultiPoly coefficient(std::string_view var, std::uint32_t e) const;

  /// Throws std::invalid_argument naming the first unassigned variable.
  BigRational eval(const std::map<std::string, BigRational>& point) const;
  /// Fast integer evaluation; values aligned with variables().
  BigInt eval_aligned(const std::vector<BigInt>& values) const;

  BigInt content() const;

  std::string to_string() const;

 private:
  void normalize();  // sort, merge, drop zeros and unused variables
  static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b);
  std::vector<Term> aligned_terms(const std::vector<std::string>& target) const;

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

/// Descending graded-lexicographic comparison: true iff a precedes b.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Names "prefix<first>" .. "prefix<last>".
std::vector<std::string> indexed_names(std::string_view prefix, int first, int last);

}  // namespace confspace
