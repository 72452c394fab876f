#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/braid/braid_word.hpp"
#include "confspace/exec.hpp"
#include "confspace/perm.hpp"

namespace confspace {

enum class Presentation { Artin, Sphere };

/// Homomorphism B_n -> S(k) (or B_n(S^2) -> S(k)) given by the images of sigma_1..sigma_{n-1}.
struct SymHom {
  int n = 0;
  int k = 0;
  std::vector<Perm> images;
  Presentation presentation = Presentation::Artin;

  Perm image(const BraidWord& w) const;
  friend bool operator==(const SymHom&, const SymHom&) = default;
};

/// First violated defining relation, or nullopt when all hold.
std::optional<std::string> violated_relation(const std::vector<Perm>& images, Presentation p);

/// The homomorphism if the images satisfy the presentation; otherwise nullopt
/// and, if `violation` is given, the first failing relation is written there.
/// Throws std::invalid_argument when the image count is not n-1 or degrees differ from k.
std::optional<SymHom> verify_sym_hom(const std::vector<Perm>& images, int n, int k, Presentation p,
                                     std::string* violation = nullptr);

/// sigma_1 -> s and sigma_{j+1} -> a sigma_j a^{-1}; valid iff the Artin
/// relations hold and the image of alpha = sigma_1..sigma_{n-1} is a.
std::optional<SymHom> hom_from_pair(const Perm& s, const Perm& a, int n, int k);

struct GalleryParams {
  int n = 0;
  int r = 0;
  int x = 0;
  int y = 0;
};

/// mu | nu6 | nu41 | nu42 | nu43 | phi1 | phi2 | phi3 | phixy.
/// Throws std::invalid_argument for unknown names or invalid parameters.
SymHom standard_gallery(const std::string& name, const GalleryParams& params);

/// Name of a parameter-free gallery homomorphism (mu, nu6, nu41, nu42, nu43,
/// phi1, phi2, phi3) conjugate to h, if any.
std::optional<std::string> gallery_label(const SymHom& h);

struct HomProperties {
  bool transitive = false;
  BigInt image_order;
  bool cyclic_image = false;
  /// A nontrivial block system of a transitive image, if one exists.
  std::optional<std::vector<std::vector<int>>> blocks;
};

HomProperties hom_properties(const SymHom& h);

/// Order of the group generated by `gens` (Schreier-Sims).
BigInt group_order(const std::vector<Perm>& gens, int k);

/// c with h2(g) = c h1(g) c^{-1}, if any. Throws on mismatched (n, k).
std::optional<Perm> are_conjugate(const SymHom& h1, const SymHom& h2);

/// Canonical representative of the conjugacy class of a homomorphism.
SymHom canonical_conjugate(const SymHom& h);

struct HomClass {
  SymHom hom;  // canonical representative
  bool cyclic = false;
  bool transitive = false;
  bool surjective = false;
  BigInt image_order;
};

/// All homomorphisms B_n -> S(k) up to conjugacy, by exhausting
/// (sigma_1-image, alpha-image) pairs with the sigma_1-image fixed to one
/// permutation per cycle type. Sorted by (cycle type of sigma_1-image,
/// cycle type of alpha-image, images). Throws std::length_error for k > 8.
std::vector<HomClass> search_homs(int n, int k, Exec exec = Exec::Parallel);

/// One permutation per cycle type of S(k), cycles on consecutive points.
std::vector<Perm> class_representatives(int k);

}  // namespace confspace
