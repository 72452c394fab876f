#include "confspace/morph/ferrari.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace confspace {

namespace {

void check_config(const std::vector<BigRational>& q) {
  if (q.size() != 4) throw std::invalid_argument("ferrari needs 4 points, got " + std::to_string(q.size()));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (q[i] == q[j]) {
        throw std::invalid_argument("repeated point q" + std::to_string(i + 1) + " = q" +
                                    std::to_string(j + 1));
      }
    }
  }
}

// Signs of q1..q4 in the three linear forms.
constexpr int kSigns[3][4] = {{1, -1, -1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}};

}  // namespace

std::array<BigRational, 3> ferrari_tuple(const std::vector<BigRational>& q) {
  check_config(q);
  std::array<BigRational, 3> z;
  for (int a = 0; a < 3; ++a) {
    BigRational s = 0;
    for (int i = 0; i < 4; ++i) s += kSigns[a][i] * q[static_cast<std::size_t>(i)];
    z[static_cast<std::size_t>(a)] = s * s / 4;
  }
  return z;
}

std::vector<BigRational> ferrari(const std::vector<BigRational>& q) {
  auto t = ferrari_tuple(q);
  std::vector<BigRational> out(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::array<MultiPoly, 3> ferrari_scaled_symbolic() {
  std::array<MultiPoly, 3> z;
  const auto names = indexed_names("q", 1, 4);
  for (int a = 0; a < 3; ++a) {
    MultiPoly s;
    for (int i = 0; i < 4; ++i) {
      s += MultiPoly::variable(names[static_cast<std::size_t>(i)]).scaled(BigInt(kSigns[a][i]));
    }
    z[static_cast<std::size_t>(a)] = s * s;
  }
  return z;
}

std::vector<BigRational> permute_points(const Perm& sigma, const std::vector<BigRational>& q) {
  if (static_cast<std::size_t>(sigma.degree()) != q.size()) {
    throw std::invalid_argument("permutation degree does not match the configuration size");
  }
  std::vector<BigRational> out(q.size());
  for (int i = 1; i <= sigma.degree(); ++i) {
    out[static_cast<std::size_t>(sigma(i) - 1)] = q[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

Perm ferrari_induced(const Perm& sigma, const std::vector<BigRational>& q) {
  const auto before = ferrari_tuple(q);
  const auto after = ferrari_tuple(permute_points(sigma, q));
  std::vector<int> images(3, 0);
  for (int b = 0; b < 3; ++b) {
    for (int a = 0; a < 3; ++a) {
      if (after[static_cast<std::size_t>(a)] == before[static_cast<std::size_t>(b)]) images[static_cast<std::size_t>(b)] = a + 1;
    }
    if (images[static_cast<std::size_t>(b)] == 0) throw std::domain_error("ferrari values not permuted");
  }
  return Perm::from_images(images);
}

}  // namespace confspace
