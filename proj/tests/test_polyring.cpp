#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "confspace/discriminant.hpp"
#include "confspace/multipoly.hpp"
#include "confspace/poly_json.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

std::map<std::string, BigRational> random_point(std::mt19937_64& rng,
                                                const std::vector<std::string>& vars) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  std::map<std::string, BigRational> pt;
  for (const auto& v : vars) pt[v] = make_rational(num(rng), den(rng));
  return pt;
}

}  // namespace

TEST_CASE("poly_eval basics") {
  CHECK(MultiPoly().eval({{"x", 5}}) == 0);
  const auto p = var("x").pow(2) - var("y");
  CHECK(p.eval({{"x", 3}, {"y", 2}}) == 7);
  CHECK_THROWS_WITH_AS(p.eval({{"x", 3}}), "unassigned variable 'y'", std::invalid_argument);
}

TEST_CASE("poly_eval is a ring homomorphism") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> vars{"a", "b", "c"};
  for (int trial = 0; trial < 50; ++trial) {
    auto f = oracle::random_poly(rng, vars, 6, 6, 20);
    auto g = oracle::random_poly(rng, vars, 6, 6, 20);
    auto pt = random_point(rng, vars);
    const auto fg = f * g;
    CHECK(fg.eval(pt) == oracle::eval_termwise(f, pt) * oracle::eval_termwise(g, pt));
    CHECK(fg.eval(pt) == oracle::eval_termwise(fg, pt));
  }
}

TEST_CASE("ring laws and canonical form") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"x", "y", "z1", "z10", "z2"};
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_poly(rng, vars, 5, 5, 9);
    auto b = oracle::random_poly(rng, vars, 5, 5, 9);
    auto c = oracle::random_poly(rng, vars, 5, 5, 9);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    auto zero = a - a;
    CHECK(zero.is_zero());
    CHECK(zero.variables().empty());
    if (!b.is_zero()) CHECK(MultiPoly::exact_div(a * b, b) == a);
  }
}

TEST_CASE("variables are sorted by name and terms by grlex") {
  auto p = var("z2") + var("z10") * var("z10") + var("a");
  REQUIRE(p.variables() == std::vector<std::string>{"a", "z10", "z2"});
  CHECK(p.to_string() == "z10^2 + a + z2");
  CHECK(p.total_degree() == 2);
}

TEST_CASE("exact division rejects non-divisors") {
  auto x = var("x");
  CHECK_THROWS_AS(MultiPoly::exact_div(x * x + 1, x), std::domain_error);
  CHECK_THROWS_AS(MultiPoly(3).divided_by(BigInt(2)), std::domain_error);
}

TEST_CASE("polynomial JSON keeps canonical order") {
  auto p = var("y").scaled(BigInt("123456789012345678901234567890")) - var("x").pow(2);
  auto j = poly_to_json(p);
  CHECK(j.dump() == R"([["-1",{"x":2}],["123456789012345678901234567890",{"y":1}]])");
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("bareiss_det small cases") {
  Matrix<MultiPoly> id(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) id(i, j) = MultiPoly(i == j ? 1 : 0);
  CHECK(bareiss_det(id) == MultiPoly(1));
  Matrix<MultiPoly> two({{var("a"), var("b")}, {var("c"), var("d")}});
  CHECK(bareiss_det(two) == var("a") * var("d") - var("b") * var("c"));
  CHECK_THROWS_AS(bareiss_det(Matrix<MultiPoly>(2, 3)), std::invalid_argument);
}

TEST_CASE("bareiss_det agrees with cofactor expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> small(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<BigInt> m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = small(rng);
    CHECK(bareiss_det(m) == oracle::cofactor_det(m));
  }
  // symbolic entries of degree <= 1, every size up to 5, with zero pivots
  const std::vector<std::string> vars{"p", "q", "r"};
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Matrix<MultiPoly> m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          MultiPoly e(small(rng) / 3);
          for (const auto& v : vars) e += MultiPoly::variable(v).scaled(small(rng) / 4);
          m(i, j) = e;
        }
      }
      CHECK(bareiss_det(m) == oracle::cofactor_det(m));
    }
  }
}

TEST_CASE("discriminant_projective shape") {
  for (int n = 2; n <= 6; ++n) {
    const auto d = discriminant_projective(n);
    CHECK(d.total_degree() == 2 * (n - 1));
    CHECK(d.is_homogeneous(2 * (n - 1)));
    std::map<std::string, int> weights;
    for (int i = 0; i <= n; ++i) weights["z" + std::to_string(i)] = i;
    CHECK(d.is_weighted_homogeneous(weights, n * (n - 1)));
    CHECK(d.substitute({{"z0", MultiPoly(1)}}).substitute([&] {
      std::map<std::string, MultiPoly> ren;
      for (int i = 1; i <= n; ++i) ren["z" + std::to_string(i)] = var(("w" + std::to_string(i)).c_str());
      return ren;
    }()) == discriminant_monic(n));
  }
  CHECK_THROWS_AS(discriminant_projective(1), std::invalid_argument);
  CHECK_THROWS_AS(discriminant_monic(0), std::invalid_argument);
}

TEST_CASE("low-degree discriminants") {
  // hand expansion of the 3x3 determinant
  CHECK(discriminant_projective(2) == var("z0") * var("z2").scaled(4) - var("z1").pow(2));
  CHECK(discriminant_monic(2) == var("w2").scaled(4) - var("w1").pow(2));
  // d_3 = Res(p, p'), frozen from an independent computer-algebra expansion
  auto w1 = var("w1"), w2 = var("w2"), w3 = var("w3");
  CHECK(discriminant_monic(3) == (w1.pow(3) * w3).scaled(4) - w1.pow(2) * w2.pow(2) -
                                     (w1 * w2 * w3).scaled(18) + w2.pow(3).scaled(4) +
                                     w3.pow(2).scaled(27));
}

TEST_CASE("discriminant scaling under the C* action") {
  auto zeta = var("zeta");
  for (int n = 3; n <= 5; ++n) {
    std::vector<MultiPoly> w{MultiPoly(0)};
    std::vector<MultiPoly> scaled{MultiPoly(0)};
    for (int i = 2; i <= n; ++i) {
      w.push_back(var(("w" + std::to_string(i)).c_str()));
      scaled.push_back(zeta.pow(static_cast<unsigned>(i)) * w.back());
    }
    CHECK(monic_discriminant_of(scaled) ==
          zeta.pow(static_cast<unsigned>(n * (n - 1))) * monic_discriminant_of(w));
  }
}

TEST_CASE("resultant") {
  auto a = var("a"), b = var("b"), t1 = MultiPoly(1);
  CHECK(resultant({t1, -a}, {t1, -b}) == a - b);
  std::vector<MultiPoly> p{MultiPoly(1), MultiPoly(-3), MultiPoly(2), var("c")};
  CHECK(resultant(p, p).is_zero());
  CHECK_THROWS_AS(resultant({MultiPoly(0), MultiPoly(0)}, p), std::invalid_argument);
  CHECK_THROWS_AS(resultant({MultiPoly(5)}, p), std::invalid_argument);
}

TEST_CASE("squarefree detection matches an independent gcd") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(2, 6);
  std::uniform_int_distribution<long> root(-4, 4);
  int squarefree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = deg(rng);
    // half the samples get a forced repeated root
    oracle::UPoly p{BigInt(1)};
    auto mul_linear = [&](long r) {
      oracle::UPoly q(p.size() + 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= p[i] * r;
      }
      p = q;
    };
    if (trial % 2 == 0) {
      const long r = root(rng);
      mul_linear(r);
      mul_linear(r);
      for (int i = 2; i < n; ++i) mul_linear(root(rng));
    } else {
      std::uniform_int_distribution<long> c(-30, 30);
      p.assign(static_cast<std::size_t>(n) + 1, 0);
      p[static_cast<std::size_t>(n)] = 1;
      for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = c(rng);
    }
    std::vector<BigInt> w;
    for (int i = n - 1; i >= 0; --i) w.push_back(p[static_cast<std::size_t>(i)]);
    oracle::UPoly dp;
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long>(i));
    const bool nonzero = monic_discriminant_of(w) != 0;
    const bool coprime = oracle::gcd_degree(p, dp) == 0;
    CHECK(nonzero == coprime);
    squarefree += coprime ? 1 : 0;
  }
  CHECK(squarefree > 20);
  CHECK(squarefree < 80);
}
