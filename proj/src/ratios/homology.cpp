#include "confspace/ratios/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace confspace {

void SparseIntMatrix::set(int r, int c, const BigInt& v) {
  auto& row = entries.at(static_cast<std::size_t>(r));
  if (v == 0) {
    row.erase(c);
  } else {
    row[c] = v;
  }
}

namespace {

using Dense = std::vector<std::vector<BigInt>>;

std::vector<BigInt> dense_smith(Dense a) {
  std::vector<BigInt> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (auto& row : a) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block
      for (std::size_t r = t + 1; r < rows && clean; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) a[t][cc] += a[r][cc];
            clean = false;
            break;
          }
        }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

std::vector<BigInt> smith_invariants(SparseIntMatrix m) {
  std::vector<std::set<int>> col_rows(static_cast<std::size_t>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.entries[static_cast<std::size_t>(r)])
      col_rows[static_cast<std::size_t>(c)].insert(r);

  std::size_t units = 0;
  for (;;) {
    // unit pivot with the smallest fill-in estimate
    int pr = -1, pc = -1;
    std::size_t best = 0;
    for (int r = 0; r < m.rows; ++r) {
      const auto& row = m.entries[static_cast<std::size_t>(r)];
      for (const auto& [c, v] : row) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (row.size() - 1) * (col_rows[static_cast<std::size_t>(c)].size() - 1);
        if (pr < 0 || cost < best) {
          pr = r;
          pc = c;
          best = cost;
        }
      }
      if (pr >= 0 && best == 0) break;
    }
    if (pr < 0) break;
    auto& prow = m.entries[static_cast<std::size_t>(pr)];
    const BigInt u = prow.at(pc);
    const std::vector<int> others(col_rows[static_cast<std::size_t>(pc)].begin(),
                                  col_rows[static_cast<std::size_t>(pc)].end());
    for (int r : others) {
      if (r == pr) continue;
      auto& row = m.entries[static_cast<std::size_t>(r)];
      const BigInt f = row.at(pc) * u;
      for (const auto& [c, v] : prow) {
        BigInt& cell = row[c];
        const bool was_zero = cell == 0;
        cell -= f * v;
        if (cell == 0) {
          row.erase(c);
          col_rows[static_cast<std::size_t>(c)].erase(r);
        } else if (was_zero) {
          col_rows[static_cast<std::size_t>(c)].insert(r);
        }
      }
    }
    for (const auto& [c, v] : prow) col_rows[static_cast<std::size_t>(c)].erase(pr);
    prow.clear();
    ++units;
  }

  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < m.rows; ++r)
    if (!m.entries[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
  for (int c = 0; c < m.cols; ++c)
    if (!col_rows[static_cast<std::size_t>(c)].empty()) live_cols.push_back(c);
  Dense dense(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : m.entries[static_cast<std::size_t>(live_rows[i])]) {
      const auto j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
      dense[i][static_cast<std::size_t>(j)] = v;
    }
  }
  std::vector<BigInt> inv(units, BigInt(1));
  auto rest = dense_smith(std::move(dense));
  inv.insert(inv.end(), rest.begin(), rest.end());
  std::sort(inv.begin(), inv.end());
  return inv;
}

SparseIntMatrix boundary_matrix(const std::vector<std::vector<int>>& lower,
                                const std::vector<std::vector<int>>& upper) {
  SparseIntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto& face = upper[c];
    for (std::size_t p = 0; p < face.size(); ++p) {
      std::vector<int> sub;
      sub.reserve(face.size() - 1);
      for (std::size_t q = 0; q < face.size(); ++q)
        if (q != p) sub.push_back(face[q]);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      if (it == lower.end() || *it != sub) throw std::logic_error("face list not closed under boundary");
      m.set(static_cast<int>(it - lower.begin()), static_cast<int>(c), BigInt(p % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

HomologyReport homology_of_faces(const std::vector<std::vector<std::vector<int>>>& faces) {
  const std::size_t top = faces.size();
  // rank of boundary d: C_d -> C_{d-1}, d = 1..top-1
  std::vector<long> rank(top + 1, 0);
  std::vector<std::vector<BigInt>> torsion(top);
  for (std::size_t d = 1; d < top; ++d) {
    const auto inv = smith_invariants(boundary_matrix(faces[d - 1], faces[d]));
    rank[d] = static_cast<long>(inv.size());
    for (const auto& f : inv)
      if (f > 1) torsion[d - 1].push_back(f);
  }
  HomologyReport rep;
  for (std::size_t d = 0; d < top; ++d) {
    const long fd = static_cast<long>(faces[d].size());
    rep.betti.push_back(fd - rank[d] - rank[d + 1]);
    rep.chi += (d % 2 == 0 ? 1 : -1) * fd;
  }
  rep.torsion = std::move(torsion);
  return rep;
}

HomologyReport betti_numbers(const RatioComplex& c, Exec exec) {
  return homology_of_faces(all_faces(c, exec));
}

}  // namespace confspace
