#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "confspace/braid/braid_word.hpp"
#include "confspace/braid/sym_hom.hpp"

using namespace confspace;

namespace {

const char* kGorinLhs = "3 -1";
// (s1 s2)^-1 [g1, g2] (s1 s2), g1 = s3 s1^-1, g2 = s1 s2^-1
const char* kGorinRhs = "-2 -1 1 -3 2 -1 3 -1 1 -2 1 2";

BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return BraidWord(n, l);
}

/// A defining relator of B_n, as a word equal to the identity.
BraidWord random_relator(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  for (;;) {
    const int i = gen(rng), j = gen(rng);
    if (std::abs(i - j) >= 2) return BraidWord(n, {i, j, -i, -j});
    if (j == i + 1) return BraidWord(n, {i, j, i, -j, -i, -j});
    if (i == j) return BraidWord(n, {i, -i});
  }
}

Perm random_perm(std::mt19937_64& rng, int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(img);
}

/// Image order by closing the generated set under multiplication.
long closure_order(const std::vector<Perm>& gens, int k) {
  std::set<Perm> seen{Perm(k)};
  std::vector<Perm> queue{Perm(k)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      Perm p = g * queue[q];
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return static_cast<long>(seen.size());
}

}  // namespace

TEST_CASE("permutations") {
  const auto p = Perm::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK(p.one_line() == "2 3 1 5 4");
  CHECK(p.cycle_string() == "(1,2,3)(4,5)");
  CHECK(p.order() == 6);
  CHECK(Perm::parse("(1,2,3)(4,5)", 5) == p);
  CHECK(Perm::parse("2 3 1 5 4", 5) == p);
  CHECK((p * p.inverse()).is_identity());
  // right-to-left composition
  const auto a = Perm::transposition(3, 1, 2), b = Perm::transposition(3, 2, 3);
  CHECK((a * b)(3) == 1);
  CHECK_THROWS_AS(Perm::from_images({1, 1, 2}), std::invalid_argument);
  CHECK(class_representatives(5).size() == 7);
}

TEST_CASE("mu_image and exponent_sum") {
  CHECK(mu_image(BraidWord(3, {1})) == Perm::transposition(3, 1, 2));
  for (int n = 3; n <= 7; ++n) {
    CHECK(mu_image(BraidWord::sphere_relator(n)).is_identity());
    CHECK(mu_image(BraidWord::alpha(n)).cycle_type() == std::vector<int>{n});
    CHECK(exponent_sum(BraidWord::centre(n)) == n * (n - 1));
  }
  CHECK(exponent_sum(BraidWord(4)) == 0);
  CHECK(exponent_sum(BraidWord::parse(4, kGorinLhs)) == 0);
  CHECK(exponent_sum(BraidWord::parse(4, kGorinRhs)) == 0);
  CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::parse(3, "1 x"), std::invalid_argument);
}

TEST_CASE("word problem: defining relations and named identities") {
  CHECK(words_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK_FALSE(words_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
  CHECK(words_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK_FALSE(words_equal(BraidWord(3, {1}), BraidWord(3, {-1})));
  CHECK(words_equal(BraidWord(3, {1, -1, 2, -2}), BraidWord(3)));
  for (int n = 4; n <= 6; ++n)
    CHECK(words_equal(BraidWord::parse(n, kGorinLhs), BraidWord::parse(n, kGorinRhs)));
  for (int n = 3; n <= 4; ++n) {
    const auto c = BraidWord::centre(n);
    for (int i = 1; i < n; ++i) {
      const BraidWord s(n, {i});
      CHECK(words_equal(c * s, s * c));
    }
  }
  CHECK_FALSE(words_equal(BraidWord::alpha(4) * BraidWord(4, {1}), BraidWord(4, {1}) * BraidWord::alpha(4)));
  CHECK_THROWS_AS(words_equal(BraidWord(3), BraidWord(4)), std::invalid_argument);
  // Delta^2 is pure but not trivial
  CHECK_FALSE(words_equal(BraidWord::centre(3), BraidWord(3)));
}

TEST_CASE("canonical form shape") {
  const auto c = canonical_form(BraidWord(3, {1, 2, 1}));
  CHECK(c.infimum == 1);
  CHECK(c.factors.empty());
  const auto inv = canonical_form(BraidWord(3, {-1}));
  CHECK(inv.infimum == -1);
  CHECK(inv.factors.size() == 1);
}

TEST_CASE("word problem is invariant under relator insertion") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 500; ++t) {
    const int n = 3 + t % 4;
    const BraidWord w = random_word(rng, n, 8);
    const BraidWord rel = random_relator(rng, n);
    std::uniform_int_distribution<std::size_t> pos(0, w.letters().size());
    const std::size_t p = pos(rng);
    std::vector<int> l(w.letters().begin(), w.letters().begin() + static_cast<long>(p));
    l.insert(l.end(), rel.letters().begin(), rel.letters().end());
    l.insert(l.end(), w.letters().begin() + static_cast<long>(p), w.letters().end());
    const BraidWord w2(n, l);
    REQUIRE(words_equal(w, w2));
    CHECK(exponent_sum(w) == exponent_sum(w2));
    CHECK(mu_image(w) == mu_image(w2));
  }
}

TEST_CASE("word problem is an equivalence relation consistent with invariants") {
  std::mt19937_64 rng(7);
  std::vector<BraidWord> words;
  for (int t = 0; t < 40; ++t) words.push_back(random_word(rng, 3, 3));
  for (const auto& a : words) {
    CHECK(words_equal(a, a));
    for (const auto& b : words) {
      const bool ab = words_equal(a, b);
      CHECK(ab == words_equal(b, a));
      if (ab) {
        CHECK(exponent_sum(a) == exponent_sum(b));
        CHECK(mu_image(a) == mu_image(b));
        for (const auto& c : words)
          if (words_equal(b, c)) CHECK(words_equal(a, c));
      }
    }
  }
  // w * w^{-1} is trivial
  for (int t = 0; t < 50; ++t) {
    const auto w = random_word(rng, 5, 10);
    CHECK(words_equal(w * w.inverse(), BraidWord(5)));
  }
}

TEST_CASE("verify_sym_hom") {
  for (int n = 3; n <= 8; ++n) {
    const auto mu = standard_gallery("mu", {n});
    CHECK(verify_sym_hom(mu.images, n, n, Presentation::Artin));
  }
  for (int n = 5; n <= 8; ++n) {
    std::string why;
    CHECK(verify_sym_hom(standard_gallery("phi2", {n}).images, n, 2 * n, Presentation::Sphere));
    CHECK_FALSE(verify_sym_hom(standard_gallery("phi1", {n}).images, n, 2 * n, Presentation::Sphere, &why));
    CHECK(why.find("= 1") != std::string::npos);
    CHECK_FALSE(verify_sym_hom(standard_gallery("phi3", {n}).images, n, 2 * n, Presentation::Sphere));
  }
  const auto nu43 = standard_gallery("nu43", {});
  CHECK(hom_properties(nu43).image_order == 12);
  CHECK_THROWS_AS(verify_sym_hom({Perm(3)}, 4, 3, Presentation::Artin), std::invalid_argument);
  std::string why;
  CHECK_FALSE(verify_sym_hom({Perm::transposition(4, 1, 2), Perm::transposition(4, 3, 4)}, 3, 4,
                             Presentation::Artin, &why));
  CHECK(why == "sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2");
}

TEST_CASE("hom_from_pair") {
  for (int n = 3; n <= 7; ++n) {
    const auto mu = standard_gallery("mu", {n});
    const auto h = hom_from_pair(mu.images[0], mu_image(BraidWord::alpha(n)), n, n);
    REQUIRE(h);
    CHECK(h->images == mu.images);
  }
  const auto nu6 = hom_from_pair(Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
                                 Perm::from_cycles(6, {{1, 2, 3}, {4, 5}}), 6, 6);
  REQUIRE(nu6);
  CHECK(verify_sym_hom(nu6->images, 6, 6, Presentation::Artin));
  CHECK_FALSE(hom_from_pair(Perm::from_cycles(5, {{1, 2, 3}}), Perm::from_cycles(5, {{1, 4}}), 5, 5));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    if (auto h = hom_from_pair(random_perm(rng, 5), random_perm(rng, 5), 4, 5))
      CHECK(verify_sym_hom(h->images, 4, 5, Presentation::Artin));
  }
}

TEST_CASE("gallery") {
  const auto phi1 = standard_gallery("phi1", {7});
  for (int i = 1; i < 7; ++i)
    CHECK(phi1.images[static_cast<std::size_t>(i - 1)] ==
          Perm::from_cycles(14, {{2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1}}));
  for (int r = 2; r <= 6; ++r) {
    for (int x = 0; x < r; ++x) {
      for (int y = 0; y < r; ++y) {
        const auto h = standard_gallery("phixy", {5, r, x, y});
        const bool coprime = std::gcd(std::gcd(x, y), r) == 1;
        CHECK(hom_properties(h).transitive == coprime);
      }
    }
  }
  for (int r = 2; r <= 3; ++r)
    for (int n = 4; n <= 5; ++n)
      for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
          const auto h = standard_gallery("phixy", {n, r, x, y});
          const auto p = hom_properties(h);
          if (p.transitive) CHECK(p.blocks.has_value());
        }
  CHECK_THROWS_AS(standard_gallery("psi", {4}), std::invalid_argument);
  CHECK_THROWS_AS(standard_gallery("phixy", {4, 0, 1, 1}), std::invalid_argument);
}

TEST_CASE("hom_properties") {
  for (int k = 3; k <= 6; ++k) {
    const auto p = hom_properties(standard_gallery("mu", {k}));
    long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    CHECK(p.transitive);
    CHECK(p.image_order == fact);
    CHECK_FALSE(p.cyclic_image);
    CHECK_FALSE(p.blocks.has_value());
  }
  const SymHom trivial{4, 3, {Perm(3), Perm(3), Perm(3)}, Presentation::Artin};
  const auto t = hom_properties(trivial);
  CHECK(t.cyclic_image);
  CHECK_FALSE(t.transitive);
  CHECK(t.image_order == 1);
  // Schreier-Sims against brute-force closure
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 3 + trial % 5;
    std::vector<Perm> gens{random_perm(rng, k)};
    if (trial % 3) gens.push_back(random_perm(rng, k));
    if (trial % 4 == 0) gens = {Perm::from_cycles(k, {{1, 2}}), Perm::from_cycles(k, {{3, k}})};
    CHECK(group_order(gens, k) == closure_order(gens, k));
  }
}

TEST_CASE("are_conjugate") {
  std::mt19937_64 rng(9);
  for (const char* name : {"mu", "phi1", "phi2"}) {
    const auto h = standard_gallery(name, {5});
    const Perm tau = random_perm(rng, h.k);
    SymHom g = h;
    for (auto& x : g.images) x = conjugate(x, tau);
    const auto c = are_conjugate(h, g);
    REQUIRE(c);
    for (std::size_t j = 0; j < h.images.size(); ++j) CHECK(conjugate(h.images[j], *c) == g.images[j]);
  }
  CHECK_FALSE(are_conjugate(standard_gallery("mu", {6}), standard_gallery("nu6", {})));
  CHECK_FALSE(are_conjugate(standard_gallery("phi1", {4}), standard_gallery("phi2", {4})));
  CHECK_THROWS_AS(are_conjugate(standard_gallery("mu", {4}), standard_gallery("mu", {5})), std::invalid_argument);
}

namespace {

std::vector<HomClass> noncyclic_transitive(const std::vector<HomClass>& all) {
  std::vector<HomClass> out;
  for (const auto& c : all)
    if (!c.cyclic && c.transitive) out.push_back(c);
  return out;
}

bool conjugate_to(const HomClass& c, const SymHom& h) { return are_conjugate(c.hom, h).has_value(); }

}  // namespace

TEST_CASE("Artin classification by exhaustive search") {
  const auto c44 = noncyclic_transitive(search_homs(4, 4));
  REQUIRE(c44.size() == 4);
  for (const char* name : {"mu", "nu41", "nu42", "nu43"}) {
    const auto h = standard_gallery(name, {4});
    CHECK(std::count_if(c44.begin(), c44.end(), [&](const HomClass& c) { return conjugate_to(c, h); }) == 1);
  }
  for (const auto& c : c44) {
    if (conjugate_to(c, standard_gallery("nu43", {}))) {
      CHECK(c.image_order == 12);
    } else {
      CHECK(c.surjective);
    }
  }

  const auto c55 = noncyclic_transitive(search_homs(5, 5));
  REQUIRE(c55.size() == 1);
  CHECK(conjugate_to(c55[0], standard_gallery("mu", {5})));
  CHECK(c55[0].surjective);

  const auto c66 = noncyclic_transitive(search_homs(6, 6));
  REQUIRE(c66.size() == 2);
  for (const char* name : {"mu", "nu6"}) {
    const auto h = standard_gallery(name, {6});
    CHECK(std::count_if(c66.begin(), c66.end(), [&](const HomClass& c) { return conjugate_to(c, h); }) == 1);
  }
  for (const auto& c : c66) CHECK(c.surjective);

  for (const auto& c : search_homs(5, 4)) CHECK(c.cyclic);
}

TEST_CASE("search classes are pairwise non-conjugate and serial equals parallel") {
  const auto a = search_homs(4, 5, Exec::Serial);
  const auto b = search_homs(4, 5, Exec::Parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].hom == b[i].hom);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(are_conjugate(a[i].hom, a[j].hom));
  CHECK_THROWS_AS(search_homs(4, 9), std::length_error);
}
