// Copyright 2026 The qpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPRIV_RNG_HPP
#define QPRIV_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace qpriv {

/// Deterministic random source. All randomness in the library flows through
/// this class from explicit 64-bit seeds: a std::mt19937_64 stream mapped to
/// 53-bit uniforms, with normals via Box-Muller. The mapping is pinned here
/// (no std::*_distribution) so identical seeds give bit-identical values on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]; keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Complex number with independent standard-normal real and imaginary
  /// parts (one Box-Muller pair).
  std::complex<double> complex_normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  /// Uniform integer in [lo, hi] (inclusive).
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(gen_() % span);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qpriv

#endif  // QPRIV_RNG_HPP
