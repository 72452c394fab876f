#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "confspace/poly_matrix.hpp"
#include "confspace/ratios/abc.hpp"
#include "confspace/ratios/complex.hpp"
#include "confspace/ratios/homology.hpp"
#include "confspace/ratios/orbits.hpp"
#include "confspace/ratios/punctured.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

using V = RatioVertex;

std::vector<BigRational> random_config(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (;;) {
    std::vector<BigRational> q;
    for (int i = 0; i < n; ++i) q.push_back(make_rational(num(rng), den(rng)));
    std::set<BigRational> s(q.begin(), q.end());
    if (static_cast<int>(s.size()) == n) return q;
  }
}

/// Value of the rational function written straight from the definitions.
BigRational value(const V& v, const std::vector<BigRational>& q) {
  auto Q = [&](int i) { return q[static_cast<std::size_t>(i - 1)]; };
  if (v.kind() == RatioKind::SR) return (Q(v[2]) - Q(v[0])) / (Q(v[2]) - Q(v[1]));
  const BigRational a = (Q(v[3]) - Q(v[0])) / (Q(v[3]) - Q(v[1]));
  const BigRational b = (Q(v[0]) - Q(v[2])) / (Q(v[1]) - Q(v[2]));
  return a / b;
}

Perm random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(img);
}

}  // namespace

TEST_CASE("as_diff_product unrolls the definitions") {
  DiffProduct sr321;
  sr321.exps[{1, 3}] = 1;
  sr321.exps[{1, 2}] = -1;
  CHECK(as_diff_product(V::sr(3, 2, 1)) == sr321);

  // (q4-q1)(q2-q3)/((q4-q2)(q1-q3)) = (+)(q1-q4)(q2-q3) / ((q2-q4)(q1-q3))
  DiffProduct cr1234;
  cr1234.exps[{1, 4}] = 1;
  cr1234.exps[{2, 3}] = 1;
  cr1234.exps[{2, 4}] = -1;
  cr1234.exps[{1, 3}] = -1;
  CHECK(as_diff_product(V::cr(1, 2, 3, 4)) == cr1234);
  CHECK(V::cr(2, 1, 4, 3) == V::cr(1, 2, 3, 4));
  CHECK(as_diff_product(V::cr(2, 1, 4, 3)) == cr1234);
}

TEST_CASE("diff products match direct evaluation and are injective") {
  std::mt19937_64 rng(3);
  const auto cat = catalogue(6, Family::L);
  std::set<DiffProduct> seen;
  for (const auto& v : cat) seen.insert(as_diff_product(v));
  CHECK(seen.size() == cat.size());
  for (int t = 0; t < 5; ++t) {
    const auto q = random_config(rng, 6);
    for (const auto& v : cat) CHECK(as_diff_product(v).eval(q) == value(v, q));
  }
}

TEST_CASE("catalogue sizes") {
  for (int n = 3; n <= 8; ++n) {
    const long c3 = n * (n - 1) * (n - 2) / 6;
    CHECK(catalogue(n, Family::SR).size() == static_cast<std::size_t>(6 * c3));
    if (n >= 4) {
      const long c4 = c3 * (n - 3) / 4;
      CHECK(catalogue(n, Family::CR).size() == static_cast<std::size_t>(6 * c4));
    }
  }
  CHECK_THROWS_AS(catalogue(3, Family::CR), std::invalid_argument);
  CHECK_THROWS_AS(catalogue(2, Family::SR), std::invalid_argument);
}

TEST_CASE("divides examples") {
  CHECK(divides_oracle(V::sr(4, 2, 1), V::sr(3, 2, 1), Family::SR));
  CHECK(divides_oracle(V::cr(1, 2, 3, 5), V::cr(1, 2, 3, 4), Family::CR));
  CHECK_FALSE(divides_oracle(V::sr(2, 3, 1), V::sr(3, 2, 1), Family::SR));
  CHECK(divides_rule(V::sr(1, 2, 3), V::cr(1, 2, 4, 3), Family::L));
  CHECK(divides_oracle(V::sr(1, 2, 3), V::cr(1, 2, 4, 3), Family::L));
  CHECK_THROWS_AS(divides_oracle(V::sr(1, 2, 3), V::sr(1, 2, 3), Family::SR), std::invalid_argument);
  CHECK_THROWS_AS(divides_rule(V::cr(1, 2, 3, 4), V::cr(1, 2, 3, 4), Family::CR), std::invalid_argument);
  // simple ratios with a common point but distinct numerators and denominators
  // divide only when cross ratios are in the catalogue
  CHECK_FALSE(divides_oracle(V::sr(1, 2, 3), V::sr(1, 2, 4), Family::SR));
  CHECK(divides_oracle(V::sr(1, 2, 3), V::sr(1, 2, 4), Family::L));
}

TEST_CASE("divides_rule agrees with divides_oracle exhaustively") {
  for (int n = 3; n <= 7; ++n) {
    for (Family f : {Family::SR, Family::CR, Family::L}) {
      if (f == Family::CR && n < 4) continue;
      const auto cat = catalogue(n, f);
      long mismatches = 0;
      for (const auto& a : cat)
        for (const auto& b : cat)
          if (a != b && divides_rule(a, b, f) != divides_oracle(a, b, f)) ++mismatches;
      CHECK_MESSAGE(mismatches == 0, "n=" << n << " family=" << family_name(f));
    }
  }
}

TEST_CASE("pairwise divisibility lemmas") {
  const auto cat = catalogue(6, Family::L);
  for (const auto& a : cat) {
    for (const auto& b : cat) {
      if (a == b || !divides_oracle(a, b, Family::L)) continue;
      if (a.kind() == RatioKind::CR && b.kind() == RatioKind::CR) {
        std::set<int> sa{a[0], a[1], a[2], a[3]}, common;
        for (int p = 0; p < 4; ++p)
          if (sa.count(b[p])) common.insert(b[p]);
        CHECK(common.size() == 3);
      }
    }
  }
  // within the simple-ratio catalogue, divisors share numerator or denominator
  for (const auto& a : catalogue(6, Family::SR)) {
    for (const auto& b : catalogue(6, Family::SR)) {
      if (a == b || !divides_oracle(a, b, Family::SR)) continue;
      const bool numerator = a[2] == b[2] && a[0] == b[0];
      const bool denominator = a[2] == b[2] && a[1] == b[1];
      CHECK((numerator || denominator));
    }
  }
}

TEST_CASE("edges match evaluation of quotients") {
  // independent of DiffProduct: mu/nu must equal some catalogue function at
  // several random points
  std::mt19937_64 rng(99);
  const int n = 5;
  const auto cat = catalogue(n, Family::CR);
  std::vector<std::vector<BigRational>> pts;
  for (int t = 0; t < 3; ++t) pts.push_back(random_config(rng, n));
  std::vector<std::vector<BigRational>> values(pts.size());
  for (std::size_t t = 0; t < pts.size(); ++t)
    for (const auto& v : cat) values[t].push_back(value(v, pts[t]));
  long edges = 0;
  for (std::size_t a = 0; a < cat.size(); ++a) {
    for (std::size_t b = a + 1; b < cat.size(); ++b) {
      bool found = false;
      for (std::size_t w = 0; w < cat.size() && !found; ++w) {
        bool all = true;
        for (std::size_t t = 0; t < pts.size() && all; ++t)
          all = values[t][b] / values[t][a] == values[t][w];
        found = all;
      }
      edges += found;
    }
  }
  CHECK(edges == 60);
  CHECK(build_complex(5, Family::CR).edges.size() == 60);
}

TEST_CASE("small complexes") {
  auto cr4 = build_complex(4, Family::CR);
  CHECK(cr4.vertices.size() == 6);
  CHECK(cr4.edges.empty());
  auto sr3 = build_complex(3, Family::SR);
  CHECK(sr3.vertices.size() == 6);
  CHECK(sr3.edges.empty());
  CHECK(betti_numbers(sr3).betti == std::vector<long>{6});
  CHECK_THROWS_AS(build_complex(3, Family::CR), std::invalid_argument);
}

TEST_CASE("maximal simplices are exactly the maximal cliques") {
  for (auto [n, f] : {std::pair{5, Family::SR}, {6, Family::CR}, {5, Family::L}}) {
    const auto c = build_complex(n, f);
    std::set<std::vector<int>> maxes(c.maximal_simplices.begin(), c.maximal_simplices.end());
    CHECK(maxes.size() == c.maximal_simplices.size());
    for (const auto& s : c.maximal_simplices) {
      CHECK(is_simplex(c.simplex(s), f));
      for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        if (std::find(s.begin(), s.end(), static_cast<int>(v)) != s.end()) continue;
        bool extends = true;
        for (int u : s) extends = extends && c.adjacency[v].test(static_cast<std::size_t>(u));
        CHECK_FALSE(extends);
      }
    }
    // flag property: every clique lies in a maximal simplex
    const auto faces = all_faces(c);
    for (const auto& level : faces) {
      for (const auto& face : level) {
        bool inside = false;
        for (const auto& s : c.maximal_simplices) {
          if (std::includes(s.begin(), s.end(), face.begin(), face.end())) {
            inside = true;
            break;
          }
        }
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("serial and parallel complexes agree") {
  for (auto f : {Family::SR, Family::CR, Family::L}) {
    const auto a = build_complex(6, f, Exec::Serial);
    const auto b = build_complex(6, f, Exec::Parallel);
    CHECK(a.vertices == b.vertices);
    CHECK(a.edges == b.edges);
    CHECK(a.maximal_simplices == b.maximal_simplices);
    CHECK(all_faces(a, Exec::Serial) == all_faces(b, Exec::Parallel));
  }
}

TEST_CASE("dimension corollary") {
  for (int n = 3; n <= 7; ++n) CHECK(complex_dimension(build_complex(n, Family::SR)) == n - 3);
  for (int n = 4; n <= 7; ++n) CHECK(complex_dimension(build_complex(n, Family::CR)) == n - 4);
  for (int n = 3; n <= 6; ++n) CHECK(complex_dimension(build_complex(n, Family::L)) == n - 3);
}

TEST_CASE("Euler characteristic formula for cross ratios") {
  for (int n = 4; n <= 7; ++n) {
    const long expected = static_cast<long>(n) * (n - 1) * (n - 2) * (13 - 3 * n) / 4;
    CHECK(euler_characteristic(build_complex(n, Family::CR)) == expected);
  }
}

TEST_CASE("Smith normal form") {
  SparseIntMatrix m(3, 3);
  const long a[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.set(r, c, BigInt(a[r][c]));
  CHECK(smith_invariants(m) == std::vector<BigInt>{2, 6, 12});

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 5;
    SparseIntMatrix s(n, n);
    Matrix<BigInt> dense(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        dense(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(rng);
        s.set(r, c, dense(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
      }
    const BigInt det = oracle::cofactor_det(dense);
    const auto inv = smith_invariants(s);
    if (det == 0) {
      CHECK(inv.size() < static_cast<std::size_t>(n));
    } else {
      REQUIRE(inv.size() == static_cast<std::size_t>(n));
      BigInt prod = 1;
      for (std::size_t i = 0; i < inv.size(); ++i) {
        prod *= inv[i];
        if (i) CHECK(inv[i] % inv[i - 1] == 0);
      }
      CHECK(prod == abs(det));
    }
  }
}

TEST_CASE("boundary of boundary vanishes") {
  for (auto [n, f] : {std::pair{6, Family::CR}, {5, Family::SR}, {5, Family::L}}) {
    const auto faces = all_faces(build_complex(n, f));
    for (std::size_t d = 2; d < faces.size(); ++d) {
      const auto outer = boundary_matrix(faces[d - 2], faces[d - 1]);
      const auto inner = boundary_matrix(faces[d - 1], faces[d]);
      for (int c = 0; c < inner.cols; ++c) {
        std::map<int, BigInt> col;
        for (int r = 0; r < inner.rows; ++r) {
          auto it = inner.entries[static_cast<std::size_t>(r)].find(c);
          if (it == inner.entries[static_cast<std::size_t>(r)].end()) continue;
          for (int rr = 0; rr < outer.rows; ++rr) {
            auto jt = outer.entries[static_cast<std::size_t>(rr)].find(r);
            if (jt != outer.entries[static_cast<std::size_t>(rr)].end()) col[rr] += jt->second * it->second;
          }
        }
        for (const auto& [r, v] : col) CHECK(v == 0);
      }
    }
  }
}

TEST_CASE("homology of cross-ratio complexes") {
  const auto h5 = betti_numbers(build_complex(5, Family::CR));
  REQUIRE(h5.betti.size() >= 2);
  CHECK(h5.betti[0] == 1);
  CHECK(h5.betti[1] == 31);
  CHECK(h5.chi == -30);
  const auto h6 = betti_numbers(build_complex(6, Family::CR));
  REQUIRE(h6.betti.size() == 3);
  CHECK(h6.betti[0] == 1);
  CHECK(h6.betti[1] == 151);
  CHECK(h6.betti[2] == 0);
  for (const auto& t : h6.torsion) CHECK(t.empty());
}

TEST_CASE("homology does not depend on vertex order") {
  std::mt19937_64 rng(8);
  for (auto [n, f] : {std::pair{5, Family::CR}, {5, Family::L}}) {
    const auto c = build_complex(n, f);
    auto faces = all_faces(c);
    const auto base = homology_of_faces(faces);
    std::vector<int> relabel(c.vertices.size());
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for (auto& level : faces) {
      for (auto& face : level) {
        for (auto& v : face) v = relabel[static_cast<std::size_t>(v)];
        std::sort(face.begin(), face.end());
      }
      std::sort(level.begin(), level.end());
    }
    const auto shuffled = homology_of_faces(faces);
    CHECK(shuffled.betti == base.betti);
    CHECK(shuffled.torsion == base.torsion);
    long chi = 0;
    for (std::size_t d = 0; d < base.betti.size(); ++d) chi += (d % 2 ? -1 : 1) * base.betti[d];
    CHECK(chi == base.chi);
  }
}

TEST_CASE("S(n) action") {
  const Simplex dc0 = delta_C(0);
  CHECK(act(Perm(5), dc0) == dc0);
  CHECK(act(Perm::transposition(4, 1, 2), dc0) == Simplex::of({V::cr(1, 2, 4, 3)}));
  for (int n = 4; n <= 6; ++n) {
    const auto c = build_complex(n, Family::L);
    for (const auto& sigma : {Perm::transposition(n, 1, 2), Perm::from_cycles(n, {[&] {
                                std::vector<int> cyc(static_cast<std::size_t>(n));
                                std::iota(cyc.begin(), cyc.end(), 1);
                                return cyc;
                              }()})}) {
      for (const auto& [a, b] : c.edges) {
        const auto sa = act(sigma, c.vertices[static_cast<std::size_t>(a)]);
        const auto sb = act(sigma, c.vertices[static_cast<std::size_t>(b)]);
        CHECK(divides_oracle(sa, sb, Family::L));
      }
    }
  }
}

TEST_CASE("involution") {
  CHECK(involution(V::sr(1, 2, 3)) == V::sr(2, 1, 3));
  std::mt19937_64 rng(1);
  for (int n = 4; n <= 7; ++n) {
    const auto q = random_config(rng, n);
    for (const auto& v : catalogue(n, Family::L)) {
      CHECK(involution(involution(v)) == v);
      CHECK(value(involution(v), q) * value(v, q) == 1);
    }
  }
  for (int n = 4; n <= 6; ++n) {
    const auto c = build_complex(n, Family::L);
    for (const auto& [a, b] : c.edges) {
      CHECK(divides_oracle(involution(c.vertices[static_cast<std::size_t>(a)]),
                           involution(c.vertices[static_cast<std::size_t>(b)]), Family::L));
    }
  }
}

TEST_CASE("mixed simplices contain one simple ratio") {
  for (int n = 4; n <= 6; ++n) {
    const auto c = build_complex(n, Family::L);
    for (const auto& s : c.maximal_simplices) {
      int sr = 0, cr = 0;
      for (int v : s) (c.vertices[static_cast<std::size_t>(v)].kind() == RatioKind::SR ? sr : cr)++;
      if (sr > 0 && cr > 0) CHECK(sr == 1);
    }
  }
}

TEST_CASE("normal forms") {
  for (int m = 0; m <= 3; ++m) {
    const auto nf = normal_form(delta_S(m), 7);
    CHECK(nf.canonical == delta_S(m));
    CHECK(nf.sigma.is_identity());
  }
  const auto nf = normal_form(Simplex::of({V::sr(1, 4, 2), V::sr(1, 5, 2)}), 5);
  CHECK(nf.canonical == delta_S_inverse(1));
  CHECK(act(nf.sigma, Simplex::of({V::sr(1, 4, 2), V::sr(1, 5, 2)})) == nf.canonical);
  CHECK_THROWS_WITH_AS(normal_form(Simplex::of({V::sr(1, 2, 3), V::cr(1, 2, 4, 3)}), 5),
                       "normal forms defined for pure families", std::invalid_argument);

  // every CR simplex reaches delta_C, every SR simplex one of the two forms
  for (int n = 5; n <= 6; ++n) {
    for (Family f : {Family::SR, Family::CR}) {
      const auto c = build_complex(n, f);
      for (const auto& level : all_faces(c)) {
        for (const auto& face : level) {
          const Simplex s = c.simplex(face);
          const auto r = normal_form(s, n);
          CHECK(act(r.sigma, s) == r.canonical);
          if (f == Family::CR) CHECK(r.canonical == delta_C(s.dimension()));
          CHECK(r.canonical == normal_form_exhaustive(s, n).canonical);
        }
      }
    }
  }
}

TEST_CASE("normal form is constant on orbits") {
  std::mt19937_64 rng(2025);
  int checked = 0;
  for (int n = 5; n <= 7; ++n) {
    for (Family f : {Family::SR, Family::CR}) {
      const auto c = build_complex(n, f);
      std::vector<std::vector<int>> pool;
      for (const auto& level : all_faces(c))
        for (const auto& face : level) pool.push_back(face);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int t = 0; t < 34; ++t) {
        const Simplex s = c.simplex(pool[pick(rng)]);
        const Perm sigma = random_perm(rng, n);
        CHECK(normal_form(act(sigma, s), n).canonical == normal_form(s, n).canonical);
        ++checked;
      }
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("orbit decomposition") {
  for (int n = 5; n <= 6; ++n) {
    for (Family f : {Family::SR, Family::CR}) {
      const auto c = build_complex(n, f);
      const auto faces = all_faces(c);
      for (int m = 0; m <= complex_dimension(c); ++m) {
        const auto orbits = orbit_decomposition(c, m);
        long total = 0;
        for (const auto& o : orbits) total += o.size;
        CHECK(total == static_cast<long>(faces[static_cast<std::size_t>(m)].size()));
        const std::size_t expected = (f == Family::SR && m >= 1) ? 2 : 1;
        CHECK(orbits.size() == expected);
      }
      CHECK_THROWS_AS(orbit_decomposition(c, complex_dimension(c) + 1), std::invalid_argument);
    }
  }
  CHECK_THROWS_AS(orbit_decomposition(5, Family::L, 1), std::invalid_argument);
}

TEST_CASE("functions omitting 0 and 1 on the punctured plane") {
  const auto one = enumerate_punctured(1);
  CHECK(one.size() == 6);
  std::set<DiffProduct> distinct;
  for (const auto& f : one) distinct.insert(f.product);
  CHECK(distinct.size() == 6);
  // at q = 1/3 the anharmonic orbit of the cross ratio
  std::set<BigRational> vals;
  for (const auto& f : one) vals.insert(f.eval({make_rational(1, 3)}));
  const BigRational l = make_rational(1, 3);
  CHECK(vals == std::set<BigRational>{l, 1 - l, 1 / l, 1 / (1 - l), (l - 1) / l, l / (l - 1)});

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 50);
  for (int m = 1; m <= 4; ++m) {
    const auto fs = enumerate_punctured(m);
    long c4 = 1;
    for (int i = 0; i < 4; ++i) c4 = c4 * (m + 3 - i) / (i + 1);
    CHECK(fs.size() == static_cast<std::size_t>(6 * c4));
    for (int t = 0; t < 100; ++t) {
      std::set<BigRational> used{0, 1};
      std::vector<BigRational> q;
      while (static_cast<int>(q.size()) < m) {
        const BigRational x = make_rational(num(rng), den(rng));
        if (used.insert(x).second) q.push_back(x);
      }
      for (const auto& f : fs) {
        const BigRational v = f.eval(q);
        CHECK(v != 0);
        CHECK(v != 1);
      }
    }
  }
  CHECK_THROWS_AS(enumerate_punctured(0), std::invalid_argument);
}

TEST_CASE("three-term relations between difference products") {
  CHECK(difference_monomials(4, 2).size() == 28);
  const auto rep4 = verify_abc(4, 2);
  CHECK(rep4.pass);
  CHECK(rep4.patterns == std::set<std::string>{"simple", "double"});
  const auto rep3 = verify_abc(3, 1);
  CHECK(rep3.pass);
  CHECK(rep3.patterns == std::set<std::string>{"simple"});

  // each relation checked by exact evaluation
  std::mt19937_64 rng(12);
  for (const auto& s : rep4.solutions) {
    const auto q = random_config(rng, 4);
    BigRational sum = 0;
    for (std::size_t i = 0; i < 3; ++i) sum += BigRational(s.coeffs[i]) * s.polys[i].eval(q);
    CHECK(sum == 0);
  }
  const auto serial = verify_abc(4, 2, Exec::Serial);
  CHECK(serial.solutions.size() == rep4.solutions.size());
  CHECK(serial.triples == rep4.triples);
  CHECK_THROWS_AS(verify_abc(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_abc(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_abc(9, 3), std::length_error);
}
