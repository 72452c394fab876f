#include "confspace/morph/maps.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "confspace/discriminant.hpp"

namespace confspace {

namespace {

void check_model(int m) {
  if (m < 2) throw std::invalid_argument("model maps need m >= 2, got " + std::to_string(m));
}

BigRational rational_pow(const BigRational& x, int e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    return 1 / rational_pow(x, -e);
  }
  BigRational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

std::vector<MultiPoly> model_map(ModelKind kind, int m, int r, const MultiPoly& zeta) {
  check_model(m);
  if (r < 0) throw std::invalid_argument("symbolic model maps need r >= 0");
  std::vector<MultiPoly> w(static_cast<std::size_t>(m));
  w[static_cast<std::size_t>(kind == ModelKind::A ? m - 1 : m - 2)] = -zeta.pow(static_cast<unsigned>(r));
  return w;
}

std::vector<BigRational> model_map(ModelKind kind, int m, int r, const BigRational& zeta) {
  check_model(m);
  std::vector<BigRational> w(static_cast<std::size_t>(m), BigRational(0));
  w[static_cast<std::size_t>(kind == ModelKind::A ? m - 1 : m - 2)] = -rational_pow(zeta, r);
  return w;
}

std::vector<BigRational> monic_from_roots(const std::vector<BigRational>& q) {
  // coefficients of prod (t - q_i), leading first
  std::vector<BigRational> c{BigRational(1)};
  for (const auto& root : q) {
    c.push_back(BigRational(0));
    for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] -= root * c[i - 1];
  }
  return {c.begin() + 1, c.end()};
}

BigRational config_discriminant(const std::vector<BigRational>& q) {
  return monic_discriminant_of(monic_from_roots(q));
}

std::vector<BigRational> covering_point(const std::vector<BigRational>& q, int m) {
  if (q.size() < 2) throw std::invalid_argument("covering map needs n >= 2 points");
  if (m < 0) throw std::invalid_argument("covering map needs m >= 0");
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (q[i] == q[j]) throw std::invalid_argument("repeated point " + to_string(q[i]));
    }
  }
  const BigRational factor = rational_pow(config_discriminant(q), m);
  std::vector<BigRational> out;
  out.reserve(q.size());
  for (const auto& x : q) out.push_back(factor * x);
  return out;
}

long covering_degree(int n, int m) { return static_cast<long>(m) * n * (n - 1) + 1; }

MultiPoly scaled_discriminant(int n) {
  const MultiPoly lambda = MultiPoly::variable("lambda");
  std::map<std::string, MultiPoly> images;
  const auto names = indexed_names("w", 1, n);
  for (int i = 1; i <= n; ++i) {
    images.emplace(names[static_cast<std::size_t>(i - 1)],
                   lambda.pow(static_cast<unsigned>(i)) * MultiPoly::variable(names[static_cast<std::size_t>(i - 1)]));
  }
  return discriminant_monic(n).substitute(images);
}

MultiPoly scaled_discriminant_expected(int n) {
  return MultiPoly::variable("lambda").pow(static_cast<unsigned>(n * (n - 1))) * discriminant_monic(n);
}

}  // namespace confspace
