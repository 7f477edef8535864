// Copyright 2026 The netbuild Authors
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

#ifndef NETBUILD_RNG_HPP
#define NETBUILD_RNG_HPP

#include <cstdint>
#include <random>

namespace netbuild {

/// SplitMix64 finalizer. Used to derive independent child seeds:
/// child(master, i) = splitmix64(master + (i + 1) * 0x9E3779B97F4A7C15).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

/// mt19937_64 with draws defined here rather than by <random>'s
/// distributions, whose output is implementation-defined. The same seed
/// therefore gives the same picks on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection on the top of the range removes modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netbuild

#endif  // NETBUILD_RNG_HPP
