#include "confspace/ratios/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace confspace {

std::string family_name(Family f) {
  switch (f) {
    case Family::SR: return "sr";
    case Family::CR: return "cr";
    case Family::L: return "l";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& s) {
  if (s == "sr") return Family::SR;
  if (s == "cr") return Family::CR;
  if (s == "l") return Family::L;
  return std::nullopt;
}

namespace {

bool has_sr(Family f) { return f != Family::CR; }
bool has_cr(Family f) { return f != Family::SR; }

void require_member(const RatioVertex& v, Family f) {
  const bool ok = v.kind() == RatioKind::SR ? has_sr(f) : has_cr(f);
  if (!ok) throw std::invalid_argument(v.to_string() + " is not in the " + family_name(f) + " catalogue");
}

}  // namespace

std::vector<RatioVertex> catalogue(int n, Family family) {
  const int min_n = family == Family::CR ? 4 : 3;
  if (n < min_n) throw std::invalid_argument("point count below family minimum");
  std::vector<RatioVertex> out;
  if (has_sr(family)) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (i != j && j != k && i != k) out.push_back(RatioVertex::sr(i, j, k));
  }
  if (has_cr(family)) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
            out.push_back(RatioVertex::cr(i, j, k, l));
          }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<RatioVertex> catalogue_quotient(const RatioVertex& nu, const RatioVertex& mu,
                                              Family family) {
  const DiffProduct q = as_diff_product(mu) * as_diff_product(nu).inverse();
  if (q.degree() != 0) return std::nullopt;
  std::vector<int> support;
  for (const auto& [pair, e] : q.exps) {
    if (e != 1 && e != -1) return std::nullopt;
    support.push_back(pair.first);
    support.push_back(pair.second);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (q.exps.size() == 2 && support.size() == 3 && has_sr(family)) {
    std::vector<int> p = support;
    do {
      const auto v = RatioVertex::sr(p[0], p[1], p[2]);
      if (as_diff_product(v) == q) return v;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  if (q.exps.size() == 4 && support.size() == 4 && has_cr(family)) {
    std::vector<int> p = support;
    do {
      const auto v = RatioVertex::cr(p[0], p[1], p[2], p[3]);
      if (as_diff_product(v) == q) return v;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return std::nullopt;
}

bool divides_oracle(const RatioVertex& nu, const RatioVertex& mu, Family family) {
  if (nu == mu) throw std::invalid_argument("divisibility is defined for distinct vertices");
  require_member(nu, family);
  require_member(mu, family);
  return catalogue_quotient(nu, mu, family).has_value();
}

bool divides_rule(const RatioVertex& nu, const RatioVertex& mu, Family family) {
  if (nu == mu) throw std::invalid_argument("divisibility is defined for distinct vertices");
  require_member(nu, family);
  require_member(mu, family);
  if (nu.kind() == RatioKind::SR && mu.kind() == RatioKind::SR) {
    const int same = (nu[0] == mu[0]) + (nu[1] == mu[1]) + (nu[2] == mu[2]);
    if (same != 2) return false;
    // replacing i or j keeps a common denominator or numerator; replacing k
    // leaves a cross ratio as the quotient
    const bool k_replaced = nu[2] != mu[2];
    if (k_replaced) return family == Family::L && nu[2] != mu[0] && nu[2] != mu[1] &&
                           mu[2] != nu[0] && mu[2] != nu[1];
    return nu[0] != mu[1] && nu[1] != mu[0];
  }
  if (nu.kind() == RatioKind::CR && mu.kind() == RatioKind::CR) {
    for (const auto& t : nu.klein_orbit()) {
      for (const auto& u : mu.klein_orbit()) {
        int diff = 0;
        for (int p = 0; p < 4; ++p) diff += t[static_cast<std::size_t>(p)] != u[static_cast<std::size_t>(p)];
        if (diff == 1) return true;
      }
    }
    return false;
  }
  const RatioVertex& s = nu.kind() == RatioKind::SR ? nu : mu;
  const RatioVertex& c = nu.kind() == RatioKind::SR ? mu : nu;
  for (const auto& t : c.klein_orbit()) {
    if (t[0] == s[0] && t[1] == s[1] && t[3] == s[2]) return true;
  }
  return false;
}

Simplex Simplex::of(std::vector<RatioVertex> vs) {
  if (vs.empty()) throw std::invalid_argument("empty simplex");
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("repeated simplex vertex");
  return Simplex{std::move(vs)};
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ", ";
    s += vertices[i].to_string();
  }
  return s + "}";
}

bool is_simplex(const Simplex& s, Family family) {
  for (std::size_t a = 0; a < s.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < s.vertices.size(); ++b)
      if (!divides_oracle(s.vertices[a], s.vertices[b], family)) return false;
  return true;
}

Simplex act(const Perm& sigma, const Simplex& s) {
  std::vector<RatioVertex> vs;
  vs.reserve(s.vertices.size());
  for (const auto& v : s.vertices) vs.push_back(act(sigma, v));
  return Simplex::of(std::move(vs));
}

bool VertexSet::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

int RatioComplex::index_of(const RatioVertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

Simplex RatioComplex::simplex(const std::vector<int>& ids) const {
  std::vector<RatioVertex> vs;
  for (int i : ids) vs.push_back(vertices.at(static_cast<std::size_t>(i)));
  return Simplex::of(std::move(vs));
}

namespace {

void bron_kerbosch(const std::vector<VertexSet>& adj, std::vector<int>& r, VertexSet p, VertexSet x,
                   std::vector<std::vector<int>>& out) {
  if (!p.any() && !x.any()) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // pivot maximizing |P ∩ N(u)|
  std::size_t best = 0, best_count = 0;
  bool have = false;
  auto consider = [&](std::size_t u) {
    const std::size_t c = (p & adj[u]).count();
    if (!have || c > best_count) {
      best = u;
      best_count = c;
      have = true;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  const VertexSet candidates = p.minus(adj[best]);
  candidates.for_each([&](std::size_t v) {
    r.push_back(static_cast<int>(v));
    bron_kerbosch(adj, r, p & adj[v], x & adj[v], out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  });
}

template <class F>
void for_vertices(std::size_t count, Exec exec, F&& body) {
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < count; ++i) body(i);
  } else {
    for (std::size_t i = 0; i < count; ++i) body(i);
  }
}

// Thread-safe collection: one bucket per start vertex, concatenated in order.
template <class T>
std::vector<T> flatten(std::vector<std::vector<T>>& buckets) {
  std::vector<T> out;
  for (auto& b : buckets) {
    for (auto& x : b) out.push_back(std::move(x));
  }
  return out;
}

std::vector<VertexSet> later_neighbours(const RatioComplex& c) {
  std::vector<VertexSet> later = c.adjacency;
  for (std::size_t v = 0; v < later.size(); ++v)
    for (std::size_t u = 0; u <= v; ++u) later[v].reset(u);
  return later;
}

void extend_faces(const std::vector<VertexSet>& later, std::vector<int>& face, const VertexSet& common,
                  std::vector<std::vector<std::vector<int>>>* store, std::vector<long>* counts) {
  const std::size_t d = face.size() - 1;
  if (store) {
    if (store->size() <= d) store->resize(d + 1);
    (*store)[d].push_back(face);
  }
  if (counts) {
    if (counts->size() <= d) counts->resize(d + 1, 0);
    ++(*counts)[d];
  }
  common.for_each([&](std::size_t u) {
    face.push_back(static_cast<int>(u));
    extend_faces(later, face, common & later[u], store, counts);
    face.pop_back();
  });
}

}  // namespace

RatioComplex build_complex(int n, Family family, Exec exec) {
  RatioComplex c;
  c.n = n;
  c.family = family;
  c.vertices = catalogue(n, family);
  const std::size_t nv = c.vertices.size();

  std::vector<std::vector<std::pair<int, int>>> edge_buckets(nv);
  for_vertices(nv, exec, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (divides_oracle(c.vertices[i], c.vertices[j], family))
        edge_buckets[i].emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  });
  c.edges = flatten(edge_buckets);

  c.adjacency.assign(nv, VertexSet(nv));
  for (const auto& [a, b] : c.edges) {
    c.adjacency[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    c.adjacency[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
  }

  // each maximal clique is reported from its smallest vertex
  std::vector<std::vector<std::vector<int>>> clique_buckets(nv);
  for_vertices(nv, exec, [&](std::size_t v) {
    VertexSet p(nv), x(nv);
    c.adjacency[v].for_each([&](std::size_t u) { (u > v ? p : x).set(u); });
    std::vector<int> r{static_cast<int>(v)};
    bron_kerbosch(c.adjacency, r, p, x, clique_buckets[v]);
  });
  c.maximal_simplices = flatten(clique_buckets);
  std::sort(c.maximal_simplices.begin(), c.maximal_simplices.end());
  return c;
}

int complex_dimension(const RatioComplex& c) {
  std::size_t best = 0;
  for (const auto& s : c.maximal_simplices) best = std::max(best, s.size());
  return static_cast<int>(best) - 1;
}

std::vector<std::vector<std::vector<int>>> all_faces(const RatioComplex& c, Exec exec) {
  const std::size_t nv = c.vertices.size();
  const auto later = later_neighbours(c);
  std::vector<std::vector<std::vector<std::vector<int>>>> per_vertex(nv);
  for_vertices(nv, exec, [&](std::size_t v) {
    std::vector<int> face{static_cast<int>(v)};
    extend_faces(later, face, later[v], &per_vertex[v], nullptr);
  });
  std::vector<std::vector<std::vector<int>>> faces;
  for (auto& pv : per_vertex) {
    if (faces.size() < pv.size()) faces.resize(pv.size());
    for (std::size_t d = 0; d < pv.size(); ++d)
      for (auto& f : pv[d]) faces[d].push_back(std::move(f));
  }
  for (auto& level : faces) std::sort(level.begin(), level.end());
  return faces;
}

long euler_characteristic(const RatioComplex& c) {
  const std::size_t nv = c.vertices.size();
  const auto later = later_neighbours(c);
  std::vector<long> counts;
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<int> face{static_cast<int>(v)};
    extend_faces(later, face, later[v], nullptr, &counts);
  }
  long chi = 0;
  for (std::size_t d = 0; d < counts.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * counts[d];
  return chi;
}

}  // namespace confspace
