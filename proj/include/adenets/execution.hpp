#pragma once

namespace adenets {

/// Selects between the OpenMP kernels and the serial reference path.
/// Both paths produce identical results; the serial path is kept for testing.
enum class Execution { Serial, Parallel };

}  // namespace adenets
