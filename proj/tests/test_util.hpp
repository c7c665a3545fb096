#pragma once

#include <cmath>
#include <cstdint>

#include "drazin/matrix.hpp"

namespace testutil {

// Small deterministic generator for test inputs (splitmix64 + Box-Muller).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
  double normal() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
  drazin::Complex cnormal() { return {normal(), normal()}; }

  drazin::Matrix matrix(std::size_t rows, std::size_t cols) {
    drazin::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }
};

}  // namespace testutil
