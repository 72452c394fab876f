#include "confspace/braid/sym_hom.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace confspace {

Perm SymHom::image(const BraidWord& w) const {
  Perm p(k);
  for (int g : w.letters()) {
    const Perm& s = images.at(static_cast<std::size_t>(std::abs(g) - 1));
    p = p * (g > 0 ? s : s.inverse());
  }
  return p;
}

std::optional<std::string> violated_relation(const std::vector<Perm>& g, Presentation p) {
  const std::size_t m = g.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (g[i] * g[j] != g[j] * g[i])
        return "sigma" + std::to_string(i + 1) + " sigma" + std::to_string(j + 1) + " = sigma" +
               std::to_string(j + 1) + " sigma" + std::to_string(i + 1);
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1])
      return "sigma" + std::to_string(i + 1) + " sigma" + std::to_string(i + 2) + " sigma" +
             std::to_string(i + 1) + " = sigma" + std::to_string(i + 2) + " sigma" +
             std::to_string(i + 1) + " sigma" + std::to_string(i + 2);
  }
  if (p == Presentation::Sphere && m > 0) {
    Perm prod(g.front().degree());
    for (std::size_t i = 0; i < m; ++i) prod = prod * g[i];
    for (std::size_t i = m; i-- > 0;) prod = prod * g[i];
    if (!prod.is_identity()) return std::string("sigma1 .. sigma") + std::to_string(m) + " sigma" +
                                    std::to_string(m) + " .. sigma1 = 1";
  }
  return std::nullopt;
}

std::optional<SymHom> verify_sym_hom(const std::vector<Perm>& images, int n, int k, Presentation p,
                                     std::string* violation) {
  if (static_cast<int>(images.size()) != n - 1)
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " generator images");
  for (const auto& g : images)
    if (g.degree() != k) throw std::invalid_argument("image degree differs from k");
  if (auto bad = violated_relation(images, p)) {
    if (violation) *violation = *bad;
    return std::nullopt;
  }
  return SymHom{n, k, images, p};
}

std::optional<SymHom> hom_from_pair(const Perm& s, const Perm& a, int n, int k) {
  std::vector<Perm> g{s};
  const Perm a_inv = a.inverse();
  for (int j = 1; j < n - 1; ++j) g.push_back(a * g.back() * a_inv);
  Perm prod(k);
  for (const auto& x : g) prod = prod * x;
  if (prod != a) return std::nullopt;
  if (violated_relation(g, Presentation::Artin)) return std::nullopt;
  return SymHom{n, k, std::move(g), Presentation::Artin};
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

SymHom must(std::optional<SymHom> h, const std::string& name) {
  if (!h) throw std::logic_error(name + " fails its defining relations");
  return *h;
}

}  // namespace

SymHom standard_gallery(const std::string& name, const GalleryParams& prm) {
  const int n = prm.n;
  auto need_n = [&](int min_n) {
    if (n < min_n) throw std::invalid_argument(name + " needs n >= " + std::to_string(min_n));
  };
  if (name == "mu") {
    need_n(2);
    std::vector<Perm> g;
    for (int i = 1; i < n; ++i) g.push_back(Perm::transposition(n, i, i + 1));
    return must(verify_sym_hom(g, n, n, Presentation::Artin), name);
  }
  if (name == "nu6") {
    return must(hom_from_pair(Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
                              Perm::from_cycles(6, {{1, 2, 3}, {4, 5}}), 6, 6),
                name);
  }
  if (name == "nu41")
    return must(hom_from_pair(Perm::from_cycles(4, {{1, 2, 3, 4}}), Perm::from_cycles(4, {{1, 2}}), 4, 4), name);
  if (name == "nu42")
    return must(hom_from_pair(Perm::from_cycles(4, {{1, 3, 2, 4}}), Perm::from_cycles(4, {{1, 2, 3, 4}}), 4, 4),
                name);
  if (name == "nu43")
    return must(hom_from_pair(Perm::from_cycles(4, {{1, 2, 3}}), Perm::from_cycles(4, {{1, 2}, {3, 4}}), 4, 4),
                name);
  if (name == "phi1" || name == "phi2" || name == "phi3") {
    need_n(2);
    const int k = 2 * n;
    std::vector<Perm> g;
    for (int i = 1; i < n; ++i) {
      std::vector<std::vector<int>> cycles;
      const bool pairs_outside = name != "phi1";
      if (pairs_outside)
        for (int t = 1; t < i; ++t) cycles.push_back({2 * t - 1, 2 * t});
      if (name == "phi2") {
        cycles.push_back({2 * i - 1, 2 * i + 1});
        cycles.push_back({2 * i, 2 * i + 2});
      } else {
        cycles.push_back({2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1});
      }
      if (pairs_outside)
        for (int t = i + 2; t <= n; ++t) cycles.push_back({2 * t - 1, 2 * t});
      g.push_back(Perm::from_cycles(k, cycles));
    }
    return must(verify_sym_hom(g, n, k, Presentation::Artin), name);
  }
  if (name == "phixy") {
    need_n(2);
    const int r = prm.r;
    if (r < 1) throw std::invalid_argument("phixy needs r >= 1");
    const int k = r * n;
    // m <-> (R, N) with m = 1 + R + r N
    auto point = [&](int R, int N) { return 1 + mod(R, r) + r * mod(N, n); };
    std::vector<Perm> g;
    for (int i = 1; i < n; ++i) {
      std::vector<int> img(static_cast<std::size_t>(k));
      for (int m = 1; m <= k; ++m) {
        const int R = (m - 1) % r;
        const int N = (m - 1 - R) / r;
        int out;
        if (N == i - 1) {
          out = point(R, N + 1);
        } else if (N == i) {
          out = point(R + prm.x, N - 1);
        } else {
          out = point(R + prm.y, N);
        }
        img[static_cast<std::size_t>(m - 1)] = out;
      }
      g.push_back(Perm::from_images(img));
    }
    return must(verify_sym_hom(g, n, k, Presentation::Artin), name);
  }
  throw std::invalid_argument("unknown gallery homomorphism '" + name + "'");
}

std::optional<std::string> gallery_label(const SymHom& h) {
  for (const char* name : {"mu", "nu6", "nu41", "nu42", "nu43", "phi1", "phi2", "phi3"}) {
    SymHom g;
    try {
      g = standard_gallery(name, GalleryParams{h.n, 0, 0, 0});
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (g.n == h.n && g.k == h.k && g.presentation == h.presentation && are_conjugate(h, g)) {
      return std::string(name);
    }
  }
  return std::nullopt;
}

namespace {

/// Stabiliser chain by the deterministic Schreier-Sims algorithm.
class StabChain {
 public:
  StabChain(const std::vector<Perm>& gens, int k) : k_(k) {
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      ensure_base_moved_by(g);
      gens_.push_back({g, 0});
    }
    if (base_.empty()) return;
    trans_.assign(base_.size(), {});
    int i = static_cast<int>(base_.size()) - 1;
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      rebuild(li);
      bool added = false;
      const auto level_gens = gens_at(li);
      for (int b = 1; b <= k_ && !added; ++b) {
        if (!trans_[li][static_cast<std::size_t>(b)]) continue;
        const Perm& ub = *trans_[li][static_cast<std::size_t>(b)];
        for (const auto* s : level_gens) {
          const Perm& usb = *trans_[li][static_cast<std::size_t>((*s)(b))];
          Perm h = usb.inverse() * (*s) * ub;
          std::size_t j = li + 1;
          sift(h, j);
          if (!h.is_identity()) {
            if (j == base_.size()) {
              ensure_base_moved_by(h);
              trans_.resize(base_.size());
            }
            gens_.push_back({h, j});
            i = static_cast<int>(j);
            added = true;
            break;
          }
        }
      }
      if (!added) --i;
    }
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& t : trans_) {
      long c = 0;
      for (const auto& u : t) c += u.has_value();
      o *= c;
    }
    return o;
  }

 private:
  struct Gen {
    Perm p;
    std::size_t level;  // fixes base points 0..level-1
  };

  std::vector<const Perm*> gens_at(std::size_t level) const {
    std::vector<const Perm*> out;
    for (const auto& g : gens_)
      if (g.level >= level) out.push_back(&g.p);
    return out;
  }

  void ensure_base_moved_by(const Perm& g) {
    for (int b : base_)
      if (g(b) != b) return;
    for (int x = 1; x <= k_; ++x) {
      if (g(x) != x) {
        base_.push_back(x);
        return;
      }
    }
  }

  void rebuild(std::size_t level) {
    auto& t = trans_[level];
    t.assign(static_cast<std::size_t>(k_) + 1, std::nullopt);
    const int b0 = base_[level];
    t[static_cast<std::size_t>(b0)] = Perm(k_);
    std::vector<int> queue{b0};
    const auto gens = gens_at(level);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int x = queue[q];
      for (const auto* s : gens) {
        const int y = (*s)(x);
        if (t[static_cast<std::size_t>(y)]) continue;
        t[static_cast<std::size_t>(y)] = (*s) * *t[static_cast<std::size_t>(x)];
        queue.push_back(y);
      }
    }
  }

  void sift(Perm& h, std::size_t& level) const {
    for (; level < base_.size(); ++level) {
      const int b = h(base_[level]);
      const auto& u = trans_[level][static_cast<std::size_t>(b)];
      if (!u) return;
      h = u->inverse() * h;
    }
  }

  int k_;
  std::vector<int> base_;
  std::vector<Gen> gens_;
  std::vector<std::vector<std::optional<Perm>>> trans_;
};

std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& gens, int k) {
  std::vector<int> comp(static_cast<std::size_t>(k) + 1, -1);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= k; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> orbit{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (const auto& g : gens) {
        const int y = g(orbit[q]);
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int k) : parent(static_cast<std::size_t>(k) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

/// Finest block system in which 1 and b share a block.
std::vector<std::vector<int>> minimal_blocks(const std::vector<Perm>& gens, int k, int b) {
  UnionFind uf(k);
  uf.unite(1, b);
  std::vector<std::pair<int, int>> queue{{1, b}};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto [x, y] = queue[q];
    for (const auto& g : gens) {
      if (uf.unite(g(x), g(y))) queue.emplace_back(g(x), g(y));
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int x = 1; x <= k; ++x) classes[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace

BigInt group_order(const std::vector<Perm>& gens, int k) { return StabChain(gens, k).order(); }

HomProperties hom_properties(const SymHom& h) {
  HomProperties p;
  const auto orbits = orbits_of(h.images, h.k);
  p.transitive = orbits.size() == 1;
  p.image_order = group_order(h.images, h.k);
  // images of the sigma_i are conjugate, so the image is cyclic iff sigma_1 generates it
  p.cyclic_image = h.images.empty() || BigInt(h.images.front().order()) == p.image_order;
  if (p.transitive) {
    for (int b = 2; b <= h.k; ++b) {
      auto blocks = minimal_blocks(h.images, h.k, b);
      if (blocks.size() > 1) {
        p.blocks = std::move(blocks);
        break;
      }
    }
  }
  return p;
}

std::optional<Perm> are_conjugate(const SymHom& h1, const SymHom& h2) {
  if (h1.n != h2.n || h1.k != h2.k) throw std::invalid_argument("homomorphisms have different (n, k)");
  const int k = h1.k;
  const std::size_t m = h1.images.size();
  for (std::size_t j = 0; j < m; ++j)
    if (h1.images[j].cycle_type() != h2.images[j].cycle_type()) return std::nullopt;

  // cycle length of every point under every generator, for pruning
  auto lengths = [&](const SymHom& h) {
    std::vector<std::vector<int>> len(static_cast<std::size_t>(k) + 1, std::vector<int>(m));
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& c : h.images[j].cycles())
        for (int x : c) len[static_cast<std::size_t>(x)][j] = static_cast<int>(c.size());
    for (int x = 1; x <= k; ++x)
      for (std::size_t j = 0; j < m; ++j)
        if (len[static_cast<std::size_t>(x)][j] == 0) len[static_cast<std::size_t>(x)][j] = 1;
    return len;
  };
  const auto len1 = lengths(h1), len2 = lengths(h2);

  std::vector<int> c(static_cast<std::size_t>(k) + 1, 0), used(static_cast<std::size_t>(k) + 1, 0);
  // assign c(x) = y and propagate along generators; returns the assigned points or nullopt on conflict
  auto propagate = [&](int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue{{x, y}};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto [a, b] = queue[q];
      if (c[static_cast<std::size_t>(a)] != 0) {
        if (c[static_cast<std::size_t>(a)] != b) return false;
        continue;
      }
      if (used[static_cast<std::size_t>(b)]) return false;
      c[static_cast<std::size_t>(a)] = b;
      used[static_cast<std::size_t>(b)] = 1;
      trail.push_back(a);
      for (std::size_t j = 0; j < m; ++j) {
        queue.emplace_back(h1.images[j](a), h2.images[j](b));
        queue.emplace_back(h1.images[j].inverse()(a), h2.images[j].inverse()(b));
      }
    }
    return true;
  };
  auto undo = [&](const std::vector<int>& trail) {
    for (int a : trail) {
      used[static_cast<std::size_t>(c[static_cast<std::size_t>(a)])] = 0;
      c[static_cast<std::size_t>(a)] = 0;
    }
  };
  std::function<bool()> search = [&]() -> bool {
    int x = 1;
    while (x <= k && c[static_cast<std::size_t>(x)] != 0) ++x;
    if (x > k) return true;
    for (int y = 1; y <= k; ++y) {
      if (used[static_cast<std::size_t>(y)] || len1[static_cast<std::size_t>(x)] != len2[static_cast<std::size_t>(y)])
        continue;
      std::vector<int> trail;
      if (propagate(x, y, trail) && search()) return true;
      undo(trail);
    }
    return false;
  };
  if (!search()) return std::nullopt;
  std::vector<int> img(c.begin() + 1, c.end());
  return Perm::from_images(img);
}

SymHom canonical_conjugate(const SymHom& h) {
  const int k = h.k;
  const auto orbits = orbits_of(h.images, k);
  // per orbit: the smallest relabelled generator table over all BFS start points
  std::vector<std::vector<std::vector<int>>> forms;  // forms[orbit][gen] = images in local labels
  for (const auto& orbit : orbits) {
    std::vector<std::vector<int>> best;
    for (int start : orbit) {
      std::map<int, int> label{{start, 0}};
      std::vector<int> order{start};
      for (std::size_t q = 0; q < order.size(); ++q) {
        for (const auto& g : h.images) {
          const int y = g(order[q]);
          if (label.emplace(y, static_cast<int>(order.size())).second) order.push_back(y);
        }
      }
      std::vector<std::vector<int>> form;
      for (const auto& g : h.images) {
        std::vector<int> row;
        for (int x : order) row.push_back(label.at(g(x)));
        form.push_back(std::move(row));
      }
      if (best.empty() || form < best) best = std::move(form);
    }
    forms.push_back(std::move(best));
  }
  // larger orbits first, then by form
  std::sort(forms.begin(), forms.end(), [](const auto& a, const auto& b) {
    const std::size_t sa = a.empty() ? 0 : a[0].size(), sb = b.empty() ? 0 : b[0].size();
    if (sa != sb) return sa > sb;
    return a < b;
  });
  std::vector<std::vector<int>> imgs(h.images.size());
  int offset = 0;
  for (const auto& f : forms) {
    const int size = f.empty() ? 1 : static_cast<int>(f[0].size());
    for (std::size_t j = 0; j < h.images.size(); ++j)
      for (int v : f[j]) imgs[j].push_back(v + offset + 1);
    offset += size;
  }
  SymHom out = h;
  out.images.clear();
  for (auto& row : imgs) out.images.push_back(Perm::from_images(row));
  return out;
}

std::vector<Perm> class_representatives(int k) {
  std::vector<Perm> out;
  // partitions of k in descending parts
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      std::vector<std::vector<int>> cycles;
      int next = 1;
      for (int p : parts) {
        std::vector<int> cyc;
        for (int t = 0; t < p; ++t) cyc.push_back(next++);
        if (p > 1) cycles.push_back(cyc);
      }
      out.push_back(Perm::from_cycles(k, cycles));
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::vector<HomClass> search_homs(int n, int k, Exec exec) {
  if (k > 8) throw std::length_error("exhaustive homomorphism search supports k <= 8");
  if (n < 3 || k < 1) throw std::invalid_argument("search needs n >= 3 and k >= 1");
  const auto reps = class_representatives(k);
  const auto perms = all_perms(k);
  std::vector<std::vector<SymHom>> found(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    std::vector<std::vector<SymHom>> local(perms.size());
    auto body = [&](std::size_t a) {
      if (auto h = hom_from_pair(reps[r], perms[a], n, k)) local[a].push_back(canonical_conjugate(*h));
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
      for (std::size_t a = 0; a < perms.size(); ++a) body(a);
    } else {
      for (std::size_t a = 0; a < perms.size(); ++a) body(a);
    }
    for (auto& l : local)
      for (auto& h : l) found[r].push_back(std::move(h));
  }
  std::vector<SymHom> all;
  for (auto& f : found)
    for (auto& h : f) all.push_back(std::move(h));
  auto key = [&](const SymHom& h) {
    return std::make_tuple(h.images.front().cycle_type(), h.image(BraidWord::alpha(n)).cycle_type(), h.images);
  };
  std::sort(all.begin(), all.end(), [&](const SymHom& a, const SymHom& b) { return key(a) < key(b); });
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<HomClass> out;
  BigInt k_factorial = 1;
  for (int i = 2; i <= k; ++i) k_factorial *= i;
  for (auto& h : all) {
    HomClass c;
    const auto props = hom_properties(h);
    c.cyclic = props.cyclic_image;
    c.transitive = props.transitive;
    c.image_order = props.image_order;
    c.surjective = props.image_order == k_factorial;
    c.hom = std::move(h);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace confspace
