#pragma once

namespace cubic {

// Selects between the OpenMP kernels and their serial reference loops.
// Both paths must produce identical results; tests compare them directly.
enum class Execution { serial, parallel };

}  // namespace cubic
