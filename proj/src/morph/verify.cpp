#include "confspace/morph/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace confspace {

std::vector<BigInt> random_point(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_int_distribution<long> dist(-kSampleRange, kSampleRange);
  std::vector<BigInt> p;
  p.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) p.emplace_back(dist(rng));
  return p;
}

std::optional<std::vector<BigInt>> sampled_check(
    std::size_t arity, int trials, std::uint64_t seed,
    const std::function<bool(const std::vector<BigInt>&)>& holds) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto p = random_point(rng, arity);
    if (!holds(p)) return p;
  }
  return std::nullopt;
}

IdentityCheck verify_identity(const MultiPoly& lhs, const MultiPoly& rhs, int trials, std::uint64_t seed) {
  const MultiPoly diff = lhs - rhs;
  std::set<std::string> names(lhs.variables().begin(), lhs.variables().end());
  names.insert(rhs.variables().begin(), rhs.variables().end());
  const std::vector<std::string> vars(names.begin(), names.end());
  IdentityCheck out;
  out.trials = trials;
  auto failing = sampled_check(vars.size(), trials, seed, [&](const std::vector<BigInt>& p) {
    std::vector<BigInt> aligned;
    for (const auto& v : diff.variables()) {
      aligned.push_back(p[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin())]);
    }
    return diff.eval_aligned(aligned) == 0;
  });
  out.pass = !failing.has_value();
  if (failing) {
    std::map<std::string, BigInt> w;
    for (std::size_t i = 0; i < vars.size(); ++i) w.emplace(vars[i], (*failing)[i]);
    out.witness = std::move(w);
  }
  return out;
}

}  // namespace confspace
