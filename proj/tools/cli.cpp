#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <stdexcept>

#include "confspace/braid/braid_word.hpp"
#include "confspace/braid/sym_hom.hpp"
#include "confspace/discriminant.hpp"
#include "confspace/morph/gallery.hpp"
#include "confspace/poly_json.hpp"
#include "confspace/ratios/abc.hpp"
#include "confspace/ratios/complex.hpp"
#include "confspace/ratios/homology.hpp"
#include "confspace/ratios/orbits.hpp"

namespace confspace {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for semantically invalid flag values; reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json vertex_json(const RatioVertex& v) {
  Json j = Json::array({v.kind() == RatioKind::SR ? "sr" : "cr"});
  for (int p = 0; p < v.arity(); ++p) j.push_back(v[p]);
  return j;
}

Json simplex_json(const Simplex& s) {
  Json j = Json::array();
  for (const auto& v : s.vertices) j.push_back(vertex_json(v));
  return j;
}

Json big_list(const std::vector<BigInt>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json perm_list(const std::vector<Perm>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.one_line());
  return j;
}

Json cycle_list(const std::vector<Perm>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.cycle_string());
  return j;
}

Json normal_form_json(const CanonicalBraid& c) {
  return Json{{"infimum", c.infimum}, {"factors", perm_list(c.factors)}};
}

struct Result {
  Json json;
  int status = 0;
};

Result run_complex(int n, const std::string& family_text, bool homology, std::optional<int> orbits) {
  const Family family = *parse_family(family_text);
  const RatioComplex c = build_complex(n, family);
  Json j{{"n", n}, {"family", family_name(family)}};
  Json vertices = Json::array();
  for (const auto& v : c.vertices) vertices.push_back(vertex_json(v));
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& [a, b] : c.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  j["maximal_simplices"] = c.maximal_simplices;
  j["dimension"] = complex_dimension(c);
  j["chi"] = euler_characteristic(c);
  if (homology) {
    const HomologyReport h = betti_numbers(c);
    Json torsion = Json::array();
    for (const auto& t : h.torsion) torsion.push_back(big_list(t));
    j["homology"] = Json{{"betti", h.betti}, {"torsion", torsion}, {"chi", h.chi}};
  }
  if (orbits) {
    const auto decomposition = orbit_decomposition(c, *orbits);
    Json list = Json::array();
    long total = 0;
    for (const auto& o : decomposition) {
      list.push_back(Json{{"representative", simplex_json(o.representative)}, {"size", o.size}});
      total += o.size;
    }
    j["orbits"] = Json{{"m", *orbits}, {"count", decomposition.size()}, {"total", total}, {"orbits", list}};
  }
  return {j, 0};
}

Result run_braid_equal(int n, const std::string& lhs_text, const std::string& rhs_text) {
  const BraidWord lhs = BraidWord::parse(n, lhs_text);
  const BraidWord rhs = BraidWord::parse(n, rhs_text);
  const CanonicalBraid a = canonical_form(lhs);
  const CanonicalBraid b = canonical_form(rhs);
  const bool equal = a == b;
  Json j{{"n", n}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"equal", equal}};
  if (equal) {
    j["normal_form"] = normal_form_json(a);
  } else {
    j["witness"] = Json{{"lhs_normal_form", normal_form_json(a)}, {"rhs_normal_form", normal_form_json(b)}};
  }
  return {j, equal ? 0 : 1};
}

Result run_braid_search(int n, int k) {
  const auto classes = search_homs(n, k);
  Json list = Json::array();
  long noncyclic_transitive = 0;
  Json labels = Json::array();
  for (const auto& c : classes) {
    const auto label = gallery_label(c.hom);
    Json item{{"images", perm_list(c.hom.images)},
              {"cycles", cycle_list(c.hom.images)},
              {"cyclic", c.cyclic},
              {"transitive", c.transitive},
              {"surjective", c.surjective},
              {"image_order", to_string(c.image_order)},
              {"label", label ? Json(*label) : Json()}};
    if (!c.cyclic && c.transitive) {
      ++noncyclic_transitive;
      labels.push_back(label ? Json(*label) : Json());
    }
    list.push_back(std::move(item));
  }
  Json j{{"n", n},
         {"k", k},
         {"class_count", classes.size()},
         {"noncyclic_transitive", noncyclic_transitive},
         {"noncyclic_transitive_labels", labels},
         {"classes", list}};
  return {j, 0};
}

Result run_braid_gallery(const std::string& name, std::optional<int> n_flag, int r, int x, int y) {
  int n = 0;
  if (n_flag) {
    n = *n_flag;
  } else if (name == "nu6") {
    n = 6;
  } else if (name == "nu41" || name == "nu42" || name == "nu43") {
    n = 4;
  } else {
    throw UsageError("--n is required for " + name);
  }
  const SymHom h = standard_gallery(name, GalleryParams{n, r, x, y});
  if (h.n != n) throw UsageError(name + " is defined for n = " + std::to_string(h.n) + " only");
  const HomProperties p = hom_properties(h);
  const auto sphere = violated_relation(h.images, Presentation::Sphere);
  Json blocks;
  if (p.blocks) blocks = *p.blocks;
  Json j{{"name", name}, {"n", h.n}, {"k", h.k}};
  if (name == "phixy") j["params"] = Json{{"r", r}, {"x", x}, {"y", y}};
  j["images"] = perm_list(h.images);
  j["cycles"] = cycle_list(h.images);
  j["relations"] = Json{{"artin", Json{{"holds", true}}},
                        {"sphere", Json{{"holds", !sphere.has_value()},
                                        {"violation", sphere ? Json(*sphere) : Json()}}}};
  j["transitive"] = p.transitive;
  j["image_order"] = to_string(p.image_order);
  j["cyclic"] = p.cyclic_image;
  j["blocks"] = blocks;
  return {j, 0};
}

Result run_gallery_verify(const std::string& name, int trials, std::uint64_t seed, bool symbolic) {
  const GalleryReport r = gallery_verify(name, trials, seed, symbolic);
  return {to_json(r), r.pass ? 0 : 1};
}

Result run_disc(int n, bool projective) {
  const MultiPoly d = projective ? discriminant_projective(n) : discriminant_monic(n);
  return {Json{{"n", n},
               {"projective", projective},
               {"variables", d.variables()},
               {"degree", d.total_degree()},
               {"terms", d.size()},
               {"polynomial", poly_to_json(d)}},
          0};
}

Result run_abc(int n, int bound) {
  const AbcReport r = verify_abc(n, bound);
  Json solutions = Json::array();
  Json witness;
  for (const auto& s : r.solutions) {
    Json polys = Json::array();
    for (const auto& p : s.polys) polys.push_back(p.to_string());
    Json item{{"polys", polys},
              {"coeffs", big_list({s.coeffs.begin(), s.coeffs.end()})},
              {"pattern", s.pattern}};
    if (s.pattern == "other" && witness.is_null()) witness = item;
    solutions.push_back(std::move(item));
  }
  Json j{{"n", r.n},
         {"degree_bound", r.degree_bound},
         {"monomials", r.monomials},
         {"triples", r.triples},
         {"patterns", r.patterns},
         {"solutions", solutions},
         {"pass", r.pass}};
  if (!r.pass) j["witness"] = witness;
  return {j, r.pass ? 0 : 1};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configuration spaces, braid homomorphisms and the morphism gallery", "confspace"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  std::string family;
  bool homology = false;
  std::optional<int> orbits;
  auto* complex = app.add_subcommand("complex", "Simplicial complex of ratio functions");
  complex->add_option("--n", n, "Number of points")->required();
  complex->add_option("--family", family, "sr | cr | l")->required()->check(CLI::IsMember({"sr", "cr", "l"}));
  complex->add_flag("--homology", homology, "Integral homology");
  complex->add_option("--orbits", orbits, "S(n)-orbits of M-simplices");

  std::string lhs, rhs;
  auto* equal = app.add_subcommand("braid-equal", "Decide equality of two braid words");
  equal->add_option("--n", n, "Strands")->required();
  equal->add_option("--lhs", lhs, "Word, e.g. \"1 2 -1\"")->required();
  equal->add_option("--rhs", rhs, "Word")->required();

  auto* search = app.add_subcommand("braid-search", "Homomorphisms B_n -> S(k) up to conjugacy");
  search->add_option("--n", n, "Strands")->required();
  search->add_option("--k", k, "Degree")->required();

  std::string name;
  std::optional<int> gallery_n;
  int r = 1, x = 0, y = 0;
  auto* braid_gallery = app.add_subcommand("braid-gallery", "A named homomorphism and its properties");
  braid_gallery->add_option("--name", name, "mu | nu6 | nu41 | nu42 | nu43 | phi1 | phi2 | phi3 | phixy")->required();
  braid_gallery->add_option("--n", gallery_n, "Strands");
  braid_gallery->add_option("--r", r, "phixy: r");
  braid_gallery->add_option("--x", x, "phixy: x");
  braid_gallery->add_option("--y", y, "phixy: y");

  int trials = 20;
  std::uint64_t seed = 1;
  bool symbolic = false;
  auto* verify = app.add_subcommand("gallery-verify", "Verify a morphism-gallery identity");
  verify->add_option("--name", name, "Gallery entry")->required()->check(CLI::IsMember(gallery_names()));
  verify->add_option("--trials", trials, "Random trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Random seed");
  verify->add_flag("--symbolic", symbolic, "feler9: exact expansion instead of sampling");

  bool projective = false;
  auto* disc = app.add_subcommand("disc", "Discriminant polynomial");
  disc->add_option("--n", n, "Degree")->required();
  disc->add_flag("--projective", projective, "D_n(z0..zn) instead of d_n(w1..wn)");

  int bound = 0;
  auto* abc = app.add_subcommand("abc", "Brute-force search for a P + b Q + c R = 0");
  abc->add_option("--n", n, "Number of points")->required();
  abc->add_option("--bound", bound, "Degree bound")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Result result;
  try {
    if (*complex) {
      result = run_complex(n, family, homology, orbits);
    } else if (*equal) {
      result = run_braid_equal(n, lhs, rhs);
    } else if (*search) {
      result = run_braid_search(n, k);
    } else if (*braid_gallery) {
      result = run_braid_gallery(name, gallery_n, r, x, y);
    } else if (*verify) {
      result = run_gallery_verify(name, trials, seed, symbolic);
    } else if (*disc) {
      result = run_disc(n, projective);
    } else if (*abc) {
      result = run_abc(n, bound);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << result.json.dump(2) << "\n";
  return result.status;
}

}  // namespace confspace
