#include "confspace/morph/feler.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "confspace/discriminant.hpp"

namespace confspace {

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

constexpr int kNineDegree = 168;

BigInt eval_named(const MultiPoly& p, const std::map<std::string, BigInt>& point) {
  std::vector<BigInt> values;
  values.reserve(p.variables().size());
  for (const auto& v : p.variables()) values.push_back(point.at(v));
  return p.eval_aligned(values);
}

BigInt three_pow_27() {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, 27);
  return r;
}

}  // namespace

std::vector<MultiPoly> feler_L() {
  const MultiPoly z1 = var("z1"), z2 = var("z2"), z3 = var("z3");
  return {
      z1.scaled(2),
      z2.scaled(5),
      z3.scaled(20),
      (z1 * z3).scaled(20) - (z2 * z2).scaled(5),
      (z1 * z1 * z3).scaled(8) - (z1 * z2 * z2).scaled(2) - (z2 * z3).scaled(4),
      (z1 * z2 * z3).scaled(4) - z2.pow(3) - (z3 * z3).scaled(8),
  };
}

MultiPoly feler_d3() {
  return discriminant_monic(3).substitute({{"w1", var("z1")}, {"w2", var("z2")}, {"w3", var("z3")}});
}

BinaryForm feler_nine_form() {
  const MultiPoly x = var("x"), y = var("y");
  const MultiPoly q[3] = {var("q1"), var("q2"), var("q3")};
  MultiPoly product(1);
  for (int a = 0; a < 3; ++a) {
    const MultiPoly& qa = q[a];
    const MultiPoly& qb = q[(a + 1) % 3];
    const MultiPoly& qc = q[(a + 2) % 3];
    MultiPoly factor = (x - y * qa).pow(3) * (qb - qc).pow(2) - (x - y * qb).pow(3) * (qc - qa).pow(2);
    product *= factor;
  }
  return BinaryForm::from_polynomial(product, 9);
}

MultiPoly feler_vandermonde() {
  const MultiPoly q1 = var("q1"), q2 = var("q2"), q3 = var("q3");
  return (q1 - q2) * (q2 - q3) * (q3 - q1);
}

std::vector<BigInt> feler_nine_discriminants(const std::vector<std::array<BigInt, 3>>& points,
                                             Exec exec) {
  const BinaryForm form = feler_nine_form();
  std::vector<BigInt> out(points.size());
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::Parallel)
  for (long i = 0; i < count; ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    const std::map<std::string, BigInt> at{{"q1", p[0]}, {"q2", p[1]}, {"q3", p[2]}};
    std::vector<BigInt> z;
    z.reserve(10);
    for (const auto& c : form.coeffs()) z.push_back(eval_named(c, at));
    out[static_cast<std::size_t>(i)] = discriminant_of(z);
  }
  return out;
}

BigInt feler_nine_target(const std::array<BigInt, 3>& q) {
  BigInt v = (q[0] - q[1]) * (q[1] - q[2]) * (q[2] - q[0]);
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), 56);
  return three_pow_27() * r;
}

MultiPoly feler_nine_target_expanded() {
  const MultiPoly v = feler_vandermonde();
  MultiPoly r(three_pow_27());
  for (int i = 0; i < 56; ++i) r *= v;
  return r;
}

MultiPoly feler_nine_discriminant_expanded(Exec exec) {
  constexpr int n = kNineDegree;
  constexpr std::size_t side = n + 1;
  std::vector<std::array<BigInt, 3>> points;
  points.reserve(side * side);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) points.push_back({BigInt(i), BigInt(j), BigInt(1)});
  }
  std::vector<BigInt> grid = feler_nine_discriminants(points, exec);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return grid[i * side + j]; };

  // Signed Stirling numbers of the first kind: x(x-1)..(x-k+1) = sum_m s(k, m) x^m.
  std::vector<std::vector<BigInt>> stirling(side, std::vector<BigInt>(side, 0));
  stirling[0][0] = 1;
  for (std::size_t k = 0; k + 1 < side; ++k) {
    for (std::size_t m = 1; m <= k + 1; ++m) {
      stirling[k + 1][m] = stirling[k][m - 1] - BigInt(static_cast<unsigned long>(k)) * stirling[k][m];
    }
  }
  std::vector<BigInt> factorial(side, 1);
  for (std::size_t k = 1; k < side; ++k) factorial[k] = factorial[k - 1] * static_cast<unsigned long>(k);

  // Values on 0..n of a degree <= n polynomial -> monomial coefficients.
  auto interpolate = [&](std::vector<BigInt>& v) {
    for (std::size_t k = 1; k < side; ++k) {
      for (std::size_t j = side - 1; j >= k; --j) v[j] -= v[j - 1];
    }
    for (std::size_t k = 0; k < side; ++k) {
      mpz_divexact(v[k].get_mpz_t(), v[k].get_mpz_t(), factorial[k].get_mpz_t());
    }
    std::vector<BigInt> coeffs(side, 0);
    for (std::size_t k = 0; k < side; ++k) {
      if (v[k] == 0) continue;
      for (std::size_t m = 0; m <= k; ++m) coeffs[m] += v[k] * stirling[k][m];
    }
    v = std::move(coeffs);
  };

  const long lines = static_cast<long>(side);
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::Parallel)
  for (long i = 0; i < lines; ++i) {
    std::vector<BigInt> row(side);
    for (std::size_t j = 0; j < side; ++j) row[j] = at(static_cast<std::size_t>(i), j);
    interpolate(row);
    for (std::size_t j = 0; j < side; ++j) at(static_cast<std::size_t>(i), j) = row[j];
  }
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::Parallel)
  for (long j = 0; j < lines; ++j) {
    std::vector<BigInt> col(side);
    for (std::size_t i = 0; i < side; ++i) col[i] = at(i, static_cast<std::size_t>(j));
    interpolate(col);
    for (std::size_t i = 0; i < side; ++i) at(i, static_cast<std::size_t>(j)) = col[i];
  }

  std::vector<Term> terms;
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      const BigInt& c = at(a, b);
      if (c == 0) continue;
      if (a + b > side - 1) throw std::logic_error("nine-form discriminant is not homogeneous of degree 168");
      terms.push_back(Term{{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                            static_cast<std::uint32_t>(n - static_cast<int>(a + b))},
                           c});
    }
  }
  return MultiPoly::from_terms({"q1", "q2", "q3"}, std::move(terms));
}

}  // namespace confspace
