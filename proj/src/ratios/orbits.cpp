#include "confspace/ratios/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace confspace {

Simplex delta_S(int m) {
  std::vector<RatioVertex> vs;
  for (int x = 3; x <= m + 3; ++x) vs.push_back(RatioVertex::sr(x, 2, 1));
  return Simplex::of(vs);
}

Simplex delta_S_inverse(int m) {
  std::vector<RatioVertex> vs;
  for (int x = 3; x <= m + 3; ++x) vs.push_back(RatioVertex::sr(2, x, 1));
  return Simplex::of(vs);
}

Simplex delta_C(int m) {
  std::vector<RatioVertex> vs;
  for (int x = 4; x <= m + 4; ++x) vs.push_back(RatioVertex::cr(1, 2, 3, x));
  return Simplex::of(vs);
}

namespace {

RatioKind pure_kind(const Simplex& s) {
  const RatioKind k = s.vertices.front().kind();
  for (const auto& v : s.vertices)
    if (v.kind() != k) throw std::invalid_argument("normal forms defined for pure families");
  return k;
}

std::vector<Simplex> targets(RatioKind kind, int m) {
  if (kind == RatioKind::CR) return {delta_C(m)};
  if (m == 0) return {delta_S(0)};
  return {delta_S(m), delta_S_inverse(m)};
}

/// Completes a partial assignment (x -> image) to a permutation of 1..n,
/// filling the rest in increasing order.
std::optional<Perm> complete(const std::map<int, int>& assign, int n) {
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [x, y] : assign) {
    if (x < 1 || x > n || y < 1 || y > n || used[static_cast<std::size_t>(y)]) return std::nullopt;
    img[static_cast<std::size_t>(x - 1)] = y;
    used[static_cast<std::size_t>(y)] = true;
  }
  int next = 1;
  for (auto& v : img) {
    if (v != 0) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    v = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return Perm::from_images(img);
}

std::optional<Perm> constructive_sr(const Simplex& s, int n) {
  const auto& v = s.vertices;
  const RatioVertex& mu0 = v.front();
  std::map<int, int> assign;
  assign[mu0[2]] = 1;
  bool common_denominator = true;
  if (v.size() > 1) common_denominator = v[1][1] == mu0[1] && v[1][2] == mu0[2];
  // common denominator: i's become 3, 4, ..; common numerator: j's do
  assign[common_denominator ? mu0[1] : mu0[0]] = 2;
  int next = 3;
  for (const auto& mu : v) {
    const int free = common_denominator ? mu[0] : mu[1];
    if (assign.count(free)) return std::nullopt;
    assign[free] = next++;
  }
  return complete(assign, n);
}

std::optional<Perm> constructive_cr(const Simplex& s, int n) {
  const auto& v = s.vertices;
  std::map<int, int> assign;
  if (v.size() == 1) {
    const auto& t = v.front();
    for (int p = 0; p < 4; ++p) assign[t[p]] = p + 1;
    return complete(assign, n);
  }
  // Klein representatives of mu_0 and mu_1 that differ in the last slot only
  for (const auto& t : v[0].klein_orbit()) {
    for (const auto& u : v[1].klein_orbit()) {
      if (t[0] != u[0] || t[1] != u[1] || t[2] != u[2]) continue;
      std::map<int, int> a{{t[0], 1}, {t[1], 2}, {t[2], 3}, {t[3], 4}, {u[3], 5}};
      int next = 6;
      bool ok = true;
      for (std::size_t idx = 2; idx < v.size() && ok; ++idx) {
        ok = false;
        for (const auto& w : v[idx].klein_orbit()) {
          if (w[0] == t[0] && w[1] == t[1] && w[2] == t[2] && !a.count(w[3])) {
            a[w[3]] = next++;
            ok = true;
            break;
          }
        }
      }
      if (ok) return complete(a, n);
    }
  }
  return std::nullopt;
}

}  // namespace

NormalForm normal_form_exhaustive(const Simplex& s, int n) {
  if (n > 8) throw std::invalid_argument("exhaustive normal form limited to n <= 8");
  const auto goals = targets(pure_kind(s), s.dimension());
  for (const auto& sigma : all_perms(n)) {
    const Simplex img = act(sigma, s);
    for (const auto& g : goals)
      if (img == g) return {sigma, g};
  }
  throw std::invalid_argument("no normal form found for " + s.to_string());
}

NormalForm normal_form(const Simplex& s, int n) {
  const RatioKind kind = pure_kind(s);
  for (const auto& v : s.vertices) validate(v, n);
  const auto goals = targets(kind, s.dimension());
  const auto sigma = kind == RatioKind::SR ? constructive_sr(s, n) : constructive_cr(s, n);
  if (sigma) {
    const Simplex img = act(*sigma, s);
    for (const auto& g : goals)
      if (img == g) return {*sigma, g};
  }
  if (n <= 7) return normal_form_exhaustive(s, n);
  throw std::invalid_argument("not a simplex of a pure family: " + s.to_string());
}

std::vector<Orbit> orbit_decomposition(const RatioComplex& c, int m) {
  if (c.family == Family::L) throw std::invalid_argument("orbit decomposition needs a pure family");
  if (m < 0 || m > complex_dimension(c)) throw std::invalid_argument("simplex dimension exceeds complex dimension");
  const auto faces = all_faces(c);
  const auto& level = faces[static_cast<std::size_t>(m)];

  // S(n) is generated by (1 2) and (1 2 .. n)
  std::vector<int> cyc(static_cast<std::size_t>(c.n));
  for (int i = 0; i < c.n; ++i) cyc[static_cast<std::size_t>(i)] = i + 1 == c.n ? 1 : i + 2;
  const std::vector<Perm> gens{Perm::transposition(c.n, 1, 2), Perm::from_images(cyc)};
  std::vector<std::vector<int>> vmap;
  for (const auto& g : gens) {
    std::vector<int> m_g;
    for (const auto& v : c.vertices) m_g.push_back(c.index_of(act(g, v)));
    vmap.push_back(std::move(m_g));
  }

  std::vector<int> orbit_of(level.size(), -1);
  std::vector<Orbit> out;
  for (std::size_t start = 0; start < level.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> stack{start};
    orbit_of[start] = id;
    long size = 0;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& mg : vmap) {
        std::vector<int> img;
        for (int x : level[cur]) img.push_back(mg[static_cast<std::size_t>(x)]);
        std::sort(img.begin(), img.end());
        const auto it = std::lower_bound(level.begin(), level.end(), img);
        if (it == level.end() || *it != img) throw std::logic_error("S(n) action left the complex");
        const auto j = static_cast<std::size_t>(it - level.begin());
        if (orbit_of[j] < 0) {
          orbit_of[j] = id;
          stack.push_back(j);
        }
      }
    }
    // level is sorted, so the first unvisited face is the orbit minimum
    out.push_back({c.simplex(level[start]), size});
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
  return out;
}

std::vector<Orbit> orbit_decomposition(int n, Family family, int m) {
  if (family == Family::L) throw std::invalid_argument("orbit decomposition needs a pure family");
  return orbit_decomposition(build_complex(n, family), m);
}

}  // namespace confspace
