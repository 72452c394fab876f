#pragma once

#include <map>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/ratios/complex.hpp"

namespace confspace {

/// Integer matrix stored as sparse rows.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, BigInt>> entries;  // entries[row][col]

  SparseIntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r)) {}
  void set(int r, int c, const BigInt& v);
};

/// Nonzero invariant factors of the Smith normal form, ascending. Unit pivots
/// are eliminated sparsely; the remaining block goes through dense reduction.
std::vector<BigInt> smith_invariants(SparseIntMatrix m);

/// Boundary map C_d -> C_{d-1}; rows index faces[d-1], columns faces[d].
/// Orientation follows the sorted vertex order of each face.
SparseIntMatrix boundary_matrix(const std::vector<std::vector<int>>& lower,
                                const std::vector<std::vector<int>>& upper);

struct HomologyReport {
  std::vector<long> betti;
  std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1 per dimension
  long chi = 0;
};

/// Integral homology from faces[d] lists (each face sorted, each level sorted).
HomologyReport homology_of_faces(const std::vector<std::vector<std::vector<int>>>& faces);

HomologyReport betti_numbers(const RatioComplex& c, Exec exec = Exec::Parallel);

}  // namespace confspace
