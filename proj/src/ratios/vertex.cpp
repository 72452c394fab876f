#include "confspace/ratios/vertex.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace confspace {

RatioVertex RatioVertex::sr(int i, int j, int k) {
  RatioVertex v;
  v.kind_ = RatioKind::SR;
  v.ix_ = {i, j, k, 0};
  return v;
}

RatioVertex RatioVertex::cr(int i, int j, int k, int l) {
  RatioVertex v;
  v.kind_ = RatioKind::CR;
  v.ix_ = {i, j, k, l};
  const auto orbit = v.klein_orbit();
  v.ix_ = *std::min_element(orbit.begin(), orbit.end());
  return v;
}

std::array<std::array<int, 4>, 4> RatioVertex::klein_orbit() const {
  const auto [i, j, k, l] = ix_;
  if (kind_ == RatioKind::SR) return {ix_, ix_, ix_, ix_};
  return {{{i, j, k, l}, {j, i, l, k}, {k, l, i, j}, {l, k, j, i}}};
}

int RatioVertex::max_index() const { return *std::max_element(ix_.begin(), ix_.end()); }

std::string RatioVertex::to_string() const {
  std::string s = kind_ == RatioKind::SR ? "sr_" : "cr_";
  for (int p = 0; p < arity(); ++p) {
    if (p) s += ',';
    s += std::to_string(ix_[static_cast<std::size_t>(p)]);
  }
  return s;
}

void DiffProduct::add_factor(int a, int b, int e) {
  if (e == 0) return;
  if (a == b) throw std::invalid_argument("zero difference factor");
  if (a > b) {
    std::swap(a, b);
    if (e % 2 != 0) scalar = -scalar;
  }
  const int v = (exps[{a, b}] += e);
  if (v == 0) exps.erase({a, b});
}

DiffProduct DiffProduct::inverse() const {
  DiffProduct r;
  r.scalar = scalar;
  for (const auto& [pair, e] : exps) r.exps[pair] = -e;
  return r;
}

int DiffProduct::degree() const {
  int d = 0;
  for (const auto& [pair, e] : exps) d += e;
  return d;
}

BigRational DiffProduct::eval(const std::vector<BigRational>& values) const {
  BigRational num = scalar, den = 1;
  for (const auto& [pair, e] : exps) {
    const BigRational diff = values.at(static_cast<std::size_t>(pair.first - 1)) -
                             values.at(static_cast<std::size_t>(pair.second - 1));
    for (int t = 0; t < std::abs(e); ++t) (e > 0 ? num : den) *= diff;
  }
  if (den == 0) throw std::domain_error("pole at evaluation point");
  return num / den;
}

std::string DiffProduct::to_string() const {
  std::string s = scalar > 0 ? "+1" : "-1";
  for (const auto& [pair, e] : exps) {
    s += "*(q" + std::to_string(pair.first) + "-q" + std::to_string(pair.second) + ")^" +
         std::to_string(e);
  }
  return s;
}

DiffProduct operator*(const DiffProduct& a, const DiffProduct& b) {
  DiffProduct r = a;
  r.scalar *= b.scalar;
  for (const auto& [pair, e] : b.exps) r.add_factor(pair.first, pair.second, e);
  return r;
}

DiffProduct as_diff_product(const RatioVertex& v) {
  DiffProduct d;
  if (v.kind() == RatioKind::SR) {
    const int i = v[0], j = v[1], k = v[2];
    d.add_factor(k, i, 1);
    d.add_factor(k, j, -1);
  } else {
    const int i = v[0], j = v[1], k = v[2], l = v[3];
    d.add_factor(l, i, 1);
    d.add_factor(j, k, 1);
    d.add_factor(l, j, -1);
    d.add_factor(i, k, -1);
  }
  return d;
}

RatioVertex involution(const RatioVertex& v) {
  if (v.kind() == RatioKind::SR) return RatioVertex::sr(v[1], v[0], v[2]);
  return RatioVertex::cr(v[1], v[0], v[2], v[3]);
}

RatioVertex act(const Perm& sigma, const RatioVertex& v) {
  auto s = [&](int x) { return sigma(x); };
  if (v.kind() == RatioKind::SR) return RatioVertex::sr(s(v[0]), s(v[1]), s(v[2]));
  return RatioVertex::cr(s(v[0]), s(v[1]), s(v[2]), s(v[3]));
}

void validate(const RatioVertex& v, int n) {
  for (int p = 0; p < v.arity(); ++p) {
    if (v[p] < 1 || v[p] > n) throw std::invalid_argument("index out of range in " + v.to_string());
    for (int q = 0; q < p; ++q)
      if (v[p] == v[q]) throw std::invalid_argument("repeated index in " + v.to_string());
  }
}

}  // namespace confspace
