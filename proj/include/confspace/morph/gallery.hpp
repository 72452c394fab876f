#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace confspace {

struct GalleryReport {
  std::string name;
  std::string mode;  // "symbolic" | "sampled"
  int trials = 0;    // 0 for purely symbolic checks
  bool pass = false;
  nlohmann::ordered_json witness;  // null when passing
  nlohmann::ordered_json details;  // null or extra findings (e.g. the Cayley scalar)
};

/// eisenstein, cayley, tame-eisenstein, ferrari, feler6, feler9, covering, model.
const std::vector<std::string>& gallery_names();

/// Runs the named verification. `symbolic` switches feler9 to full expansion.
/// Throws std::invalid_argument for an unknown name or trials < 1.
GalleryReport gallery_verify(const std::string& name, int trials = 20, std::uint64_t seed = 1,
                             bool symbolic = false);

nlohmann::ordered_json to_json(const GalleryReport& r);

}  // namespace confspace
