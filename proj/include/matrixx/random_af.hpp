#pragma once

#include <cstdint>

#include "matrixx/af.hpp"

namespace matrixx {

// Seeded Erdős–Rényi-style instance: arguments a1..an; every ordered pair
// (i, j) with i ≠ j becomes an attack with probability `attack_probability`,
// every node attacks itself with probability `self_attack_probability`.
// The draw order is fixed (row-major, self-loop drawn in place), so a seed
// pins the instance down to the byte on every platform.
struct RandomAfParams {
  std::uint32_t n = 0;
  double attack_probability = 0.0;
  double self_attack_probability = 0.0;
  std::uint32_t seed = 1;
};

ArgumentationFramework random_framework(const RandomAfParams& params);

}  // namespace matrixx
