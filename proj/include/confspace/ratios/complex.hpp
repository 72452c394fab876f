#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confspace/exec.hpp"
#include "confspace/perm.hpp"
#include "confspace/ratios/vertex.hpp"

namespace confspace {

/// Vertex catalogue: simple ratios, cross ratios, or both (L).
enum class Family { SR, CR, L };

std::string family_name(Family f);              // "sr" | "cr" | "l"
std::optional<Family> parse_family(const std::string& s);

/// All vertices of the family on q_1..q_n, sorted (sr before cr).
/// Throws std::invalid_argument below the family minimum (3 for SR and L, 4 for CR).
std::vector<RatioVertex> catalogue(int n, Family family);

/// mu / nu as a vertex of the family's catalogue, if it is one.
std::optional<RatioVertex> catalogue_quotient(const RatioVertex& nu, const RatioVertex& mu,
                                              Family family);

/// nu | mu by the definition: mu * nu^{-1} is a catalogue vertex with scalar +1.
/// Throws std::invalid_argument if nu == mu.
bool divides_oracle(const RatioVertex& nu, const RatioVertex& mu, Family family);

/// The same relation by index replacement: simple ratios keep k and one of
/// i, j (and, with cross ratios in the catalogue, may also replace k); cross
/// ratios differ in one position of some pair of Klein representatives;
/// sr_ijk is joined to the cross ratios cr_ijlk.
bool divides_rule(const RatioVertex& nu, const RatioVertex& mu, Family family);

/// Vertex set of a simplex, kept sorted.
struct Simplex {
  std::vector<RatioVertex> vertices;

  static Simplex of(std::vector<RatioVertex> vs);
  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  std::string to_string() const;
  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// Pairwise divisibility check.
bool is_simplex(const Simplex& s, Family family);

Simplex act(const Perm& sigma, const Simplex& s);

/// Fixed-width bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool any() const;
  std::size_t count() const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Flag complex of the divisibility graph.
struct RatioComplex {
  int n = 0;
  Family family = Family::SR;
  std::vector<RatioVertex> vertices;
  std::vector<std::pair<int, int>> edges;           // i < j, sorted
  std::vector<std::vector<int>> maximal_simplices;  // sorted vertex indices, sorted
  std::vector<VertexSet> adjacency;

  int index_of(const RatioVertex& v) const;  // -1 if absent
  Simplex simplex(const std::vector<int>& ids) const;
};

RatioComplex build_complex(int n, Family family, Exec exec = Exec::Parallel);

/// Largest simplex size minus one.
int complex_dimension(const RatioComplex& c);

/// faces[d] = all d-dimensional simplices (sorted vertex-index lists), sorted.
std::vector<std::vector<std::vector<int>>> all_faces(const RatioComplex& c,
                                                     Exec exec = Exec::Parallel);

long euler_characteristic(const RatioComplex& c);

}  // namespace confspace
