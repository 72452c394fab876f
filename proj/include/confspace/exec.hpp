#pragma once

namespace confspace {

/// Selects the serial reference kernel or the OpenMP one. Both produce
/// identical, canonically ordered results.
enum class Exec { Serial, Parallel };

}  // namespace confspace
