#include "confspace/morph/eisenstein.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace confspace {

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

using Complex = std::complex<double>;

// Roots of c0 t^3 + c1 t^2 + c2 t + c3, c0 != 0, via the companion matrix.
std::vector<Complex> cubic_roots(const std::array<double, 4>& c) {
  Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
  companion(0, 0) = -c[1] / c[0];
  companion(0, 1) = -c[2] / c[0];
  companion(0, 2) = -c[3] / c[0];
  companion(1, 0) = 1;
  companion(2, 1) = 1;
  Eigen::EigenSolver<Eigen::Matrix3d> solver(companion, false);
  std::vector<Complex> roots;
  for (int i = 0; i < 3; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

}  // namespace

Cubic cubic_symbols() { return {var("z0"), var("z1"), var("z2"), var("z3")}; }

BinaryForm binomial_cubic(const Cubic& z) {
  return BinaryForm({z[0], z[1].scaled(3), z[2].scaled(3), z[3]});
}

MultiPoly eisenstein_discriminant(const Cubic& z) {
  const auto& [z0, z1, z2, z3] = z;
  return z0 * z0 * z3 * z3 - (z1 * z1 * z2 * z2).scaled(3) - (z0 * z1 * z2 * z3).scaled(6) +
         (z0 * z2 * z2 * z2).scaled(4) + (z1 * z1 * z1 * z3).scaled(4);
}

Cubic eisenstein(const Cubic& z) {
  const auto& [z0, z1, z2, z3] = z;
  return {
      (z1 * z1 * z1).scaled(2) - (z0 * z1 * z2).scaled(3) + z0 * z0 * z3,
      (z0 * z2 * z2).scaled(2) - z0 * z1 * z3 - z1 * z1 * z2,
      (z1 * z1 * z3).scaled(2) - z0 * z2 * z3 - z1 * z2 * z2,
      (z2 * z2 * z2).scaled(2) - (z1 * z2 * z3).scaled(3) + z0 * z3 * z3,
  };
}

Cubic eisenstein_from_derivatives() {
  const MultiPoly d = eisenstein_discriminant(cubic_symbols());
  return {d.derivative("z3").divided_by(2), d.derivative("z2").divided_by(6),
          d.derivative("z1").divided_by(6), d.derivative("z0").divided_by(2)};
}

static MultiPoly hessian_polynomial(const BinaryForm& f) {
  const MultiPoly p = f.as_polynomial();
  const MultiPoly px = p.derivative("x");
  const MultiPoly py = p.derivative("y");
  return px.derivative("x") * py.derivative("y") - px.derivative("y") * px.derivative("y");
}

BinaryForm hessian(const BinaryForm& f) {
  if (f.degree() < 2) throw std::invalid_argument("hessian needs degree >= 2");
  const MultiPoly h = hessian_polynomial(f);
  if (h.is_zero()) throw std::domain_error("hessian vanishes identically (n-fold root)");
  return BinaryForm::from_polynomial(h, 2 * f.degree() - 4);
}

BinaryForm cayley_eisenstein(const BinaryForm& f) {
  if (f.degree() != 3) {
    throw std::invalid_argument("cayley form needs a cubic, got degree " + std::to_string(f.degree()));
  }
  const MultiPoly p = f.as_polynomial();
  const MultiPoly h = hessian_polynomial(f);
  MultiPoly j = p.derivative("x") * h.derivative("y") - p.derivative("y") * h.derivative("x");
  if (j.is_zero()) throw std::domain_error("cayley form vanishes identically (triple root)");
  return BinaryForm::from_polynomial(j, 3);
}

std::optional<CayleyRelation> cayley_relation() {
  const Cubic z = cubic_symbols();
  const MultiPoly j = cayley_eisenstein(binomial_cubic(z)).as_polynomial();
  const MultiPoly e = binomial_cubic(eisenstein(z)).as_polynomial();
  const MultiPoly x = var("x"), y = var("y");
  const std::vector<std::pair<std::string, std::map<std::string, MultiPoly>>> transforms = {
      {"identity", {}},
      {"y->-y", {{"y", -y}}},
      {"x->-x", {{"x", -x}}},
      {"x<->y", {{"x", y}, {"y", x}}},
      {"x<->-y", {{"x", -y}, {"y", x}}},
  };
  for (const auto& [name, images] : transforms) {
    const MultiPoly t = e.substitute(images);
    if (t.is_zero() || t.leading_term().exps != j.leading_term().exps || !(t.variables() == j.variables())) {
      continue;
    }
    BigRational s(j.leading_term().coeff, t.leading_term().coeff);
    s.canonicalize();
    if (t.scaled(s.get_num()) == j.scaled(s.get_den())) return CayleyRelation{s, name};
  }
  return std::nullopt;
}

MoebiusMap tame_eisenstein(const Cubic& z) {
  const auto& [z0, z1, z2, z3] = z;
  const MultiPoly base = -eisenstein_discriminant(z);
  if (base.is_zero()) throw std::domain_error("degenerate cubic: D = 0");
  const MultiPoly xa = z1 * z2 - z0 * z3;
  const MultiPoly xb = (z2 * z2 - z1 * z3).scaled(2);
  const MultiPoly xc = (z0 * z2 - z1 * z1).scaled(2);
  auto over_root = [&](const MultiPoly& x) { return QuadFraction(FormalSqrt(base, MultiPoly(), x), base); };
  return MoebiusMap{over_root(xa), over_root(xb), over_root(xc), over_root(-xa)};
}

TameActionCheck tame_action_check(const std::array<BigRational, 4>& z, double tolerance) {
  TameActionCheck out;
  const auto& [z0, z1, z2, z3] = z;
  const BigRational d = z0 * z0 * z3 * z3 - 3 * z1 * z1 * z2 * z2 - 6 * z0 * z1 * z2 * z3 +
                        4 * z0 * z2 * z2 * z2 + 4 * z1 * z1 * z1 * z3;
  const BigRational w0 = 2 * z1 * z1 * z1 - 3 * z0 * z1 * z2 + z0 * z0 * z3;
  const BigRational w1 = 2 * z0 * z2 * z2 - z0 * z1 * z3 - z1 * z1 * z2;
  const BigRational w2 = 2 * z1 * z1 * z3 - z0 * z2 * z3 - z1 * z2 * z2;
  const BigRational w3 = 2 * z2 * z2 * z2 - 3 * z1 * z2 * z3 + z0 * z3 * z3;
  double scale = 0;
  for (const auto& c : z) scale = std::max(scale, std::abs(c.get_d()));
  if (z0 == 0 || w0 == 0 || std::abs(d.get_d()) < 1e-6 * std::pow(scale, 4)) return out;
  out.usable = true;

  const double xa = BigRational(z1 * z2 - z0 * z3).get_d();
  const double xb = BigRational(2 * (z2 * z2 - z1 * z3)).get_d();
  const double xc = BigRational(2 * (z0 * z2 - z1 * z1)).get_d();
  std::vector<Complex> images;
  for (const Complex& r : cubic_roots({z0.get_d(), 3 * z1.get_d(), 3 * z2.get_d(), z3.get_d()})) {
    images.push_back((xa * r + xb) / (xc * r - xa));
  }
  std::vector<Complex> targets;
  for (const Complex& r : cubic_roots({w0.get_d(), 3 * w1.get_d(), 3 * w2.get_d(), w3.get_d()})) {
    targets.push_back(-r);
  }
  std::vector<bool> used(targets.size(), false);
  out.matched = true;
  for (const Complex& a : images) {
    std::size_t best = targets.size();
    double best_err = 0;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (used[k]) continue;
      const double err = std::abs(a - targets[k]) / std::max({1.0, std::abs(a), std::abs(targets[k])});
      if (best == targets.size() || err < best_err) {
        best = k;
        best_err = err;
      }
    }
    used[best] = true;
    out.max_error = std::max(out.max_error, best_err);
    if (!std::isfinite(best_err) || best_err > tolerance) out.matched = false;
  }
  return out;
}

}  // namespace confspace
