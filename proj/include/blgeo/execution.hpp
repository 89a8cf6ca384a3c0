#pragma once

namespace blgeo {

/// Selects the serial reference path or the OpenMP path of a kernel.
/// Both paths produce identical results; the serial one is kept for testing
/// and benchmarking.
enum class Execution { serial, parallel };

}  // namespace blgeo
