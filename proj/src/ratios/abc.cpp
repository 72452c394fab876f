#include "confspace/ratios/abc.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "confspace/multipoly.hpp"

namespace confspace {

namespace {

using Coeffs = std::map<std::vector<std::uint32_t>, BigInt>;

Coeffs expand(const DiffProduct& d, int n) {
  MultiPoly p(d.scalar);
  for (const auto& [pair, e] : d.exps) {
    const MultiPoly diff = MultiPoly::variable("q" + std::to_string(pair.first)) -
                           MultiPoly::variable("q" + std::to_string(pair.second));
    p *= diff.pow(static_cast<unsigned>(e));
  }
  std::vector<int> slot;
  for (const auto& v : p.variables()) slot.push_back(std::stoi(v.substr(1)) - 1);
  Coeffs out;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < t.exps.size(); ++i) e[static_cast<std::size_t>(slot[i])] = t.exps[i];
    out[e] = t.coeff;
  }
  return out;
}

bool coprime(const DiffProduct& a, const DiffProduct& b) {
  for (const auto& [pair, e] : a.exps)
    if (b.exps.count(pair)) return false;
  return true;
}

/// Kernel vector of the 3-column system with every entry nonzero, if the kernel is a line.
std::optional<std::array<BigInt, 3>> relation(const std::array<const Coeffs*, 3>& cols) {
  std::set<std::vector<std::uint32_t>> keys;
  for (const auto* c : cols)
    for (const auto& [k, v] : *c) keys.insert(k);
  std::vector<std::array<BigRational, 3>> rows;
  for (const auto& k : keys) {
    std::array<BigRational, 3> r;
    for (std::size_t j = 0; j < 3; ++j) {
      auto it = cols[j]->find(k);
      r[j] = it == cols[j]->end() ? BigRational(0) : BigRational(it->second);
    }
    rows.push_back(r);
  }
  // reduced row echelon form
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < 3 && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const BigRational lead = rows[rank][c];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const BigRational f = rows[r][c];
      for (std::size_t j = 0; j < 3; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  if (rank != 2) return std::nullopt;
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::array<BigRational, 3> v;
  v[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t i = 0; i < 2; ++i)
    v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][static_cast<std::size_t>(free_col)];
  for (const auto& x : v)
    if (x == 0) return std::nullopt;
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, BigInt(x.get_den()));
  std::array<BigInt, 3> out;
  BigInt g = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    const BigRational scaled = v[j] * l;
    out[j] = scaled.get_num();
    g = gcd(g, out[j]);
  }
  const int sign = out[0] < 0 ? -1 : 1;
  for (auto& x : out) x = x / g * sign;
  return out;
}

std::string classify(const std::array<DiffProduct, 3>& polys) {
  std::set<std::pair<int, int>> pairs;
  std::set<int> points;
  int degree = -1;
  for (const auto& p : polys) {
    const int d = p.degree();
    if (degree >= 0 && d != degree) return "other";
    degree = d;
    for (const auto& [pair, e] : p.exps) {
      if (e != 1) return "other";
      pairs.insert(pair);
      points.insert(pair.first);
      points.insert(pair.second);
    }
  }
  // (q_a - q_b), (q_b - q_c), (q_c - q_a)
  if (degree == 1 && points.size() == 3 && pairs.size() == 3) return "simple";
  // the three perfect matchings of {p, q, r, s}
  if (degree == 2 && points.size() == 4 && pairs.size() == 6) {
    for (const auto& p : polys) {
      auto it = p.exps.begin();
      const auto a = it->first, b = std::next(it)->first;
      if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
        return "other";
    }
    return "double";
  }
  return "other";
}

void enumerate(int n, int budget, int first_pair, DiffProduct& cur, std::vector<DiffProduct>& out) {
  out.push_back(cur);
  if (budget == 0) return;
  int idx = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b, ++idx) {
      if (idx < first_pair) continue;
      cur.add_factor(a, b, 1);
      enumerate(n, budget - 1, idx, cur, out);
      cur.add_factor(a, b, -1);
    }
  }
}

}  // namespace

std::vector<DiffProduct> difference_monomials(int n, int degree_bound) {
  std::vector<DiffProduct> out;
  DiffProduct cur;
  enumerate(n, degree_bound, 0, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const DiffProduct& a, const DiffProduct& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exps < b.exps;
  });
  return out;
}

AbcReport verify_abc(int n, int degree_bound, Exec exec) {
  if (n < 3) throw std::invalid_argument("need at least 3 variables");
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
  AbcReport rep;
  rep.n = n;
  rep.degree_bound = degree_bound;
  const auto monos = difference_monomials(n, degree_bound);
  const std::size_t count = monos.size();
  if (count > 600) throw std::length_error("abc search capacity exceeded (" + std::to_string(count) + " monomials)");
  rep.monomials = static_cast<long>(count);
  std::vector<Coeffs> expanded;
  for (const auto& m : monos) expanded.push_back(expand(m, n));

  // multisets i <= j <= k; only constants may repeat, and (1,1,1) is excluded
  std::vector<std::vector<AbcSolution>> found(count);
  std::vector<long> triples(count, 0);
  auto body = [&](std::size_t i) {
    for (std::size_t j = i; j < count; ++j) {
      if (!coprime(monos[i], monos[j])) continue;
      if (i == j && monos[i].degree() > 0) continue;
      for (std::size_t k = j; k < count; ++k) {
        if (monos[k].degree() == 0) continue;  // sorted: constants come first
        if (j == k) continue;
        if (!coprime(monos[i], monos[k]) || !coprime(monos[j], monos[k])) continue;
        ++triples[i];
        const auto rel = relation({&expanded[i], &expanded[j], &expanded[k]});
        if (!rel) continue;
        AbcSolution s{{monos[i], monos[j], monos[k]}, *rel, ""};
        s.pattern = classify(s.polys);
        found[i].push_back(std::move(s));
      }
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < count; ++i) body(i);
  } else {
    for (std::size_t i = 0; i < count; ++i) body(i);
  }
  for (std::size_t i = 0; i < count; ++i) {
    rep.triples += triples[i];
    for (auto& s : found[i]) {
      rep.patterns.insert(s.pattern);
      rep.solutions.push_back(std::move(s));
    }
  }
  rep.pass = !rep.patterns.count("other");
  return rep;
}

}  // namespace confspace
