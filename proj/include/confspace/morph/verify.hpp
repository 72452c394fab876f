#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "confspace/multipoly.hpp"

namespace confspace {

/// Sample coordinates are uniform integers in [-kSampleRange, kSampleRange].
inline constexpr long kSampleRange = 1000000000L;

std::vector<BigInt> random_point(std::mt19937_64& rng, std::size_t arity);

/// Evaluates `holds` at `trials` seeded random points; returns the first failing
/// point, or nullopt if all pass. Throws std::invalid_argument for trials < 1.
std::optional<std::vector<BigInt>> sampled_check(
    std::size_t arity, int trials, std::uint64_t seed,
    const std::function<bool(const std::vector<BigInt>&)>& holds);

struct IdentityCheck {
  bool pass = false;
  int trials = 0;
  std::optional<std::map<std::string, BigInt>> witness;  // first point where lhs != rhs
};

/// Schwartz-Zippel test of lhs == rhs: a false identity of total degree d survives
/// one trial with probability at most d / (2 * 10^9 + 1).
IdentityCheck verify_identity(const MultiPoly& lhs, const MultiPoly& rhs, int trials,
                              std::uint64_t seed = 1);

}  // namespace confspace
