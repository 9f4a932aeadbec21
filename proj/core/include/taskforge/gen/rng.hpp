// Copyright 2026 The Taskforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TASKFORGE_GEN_RNG_HPP_
#define TASKFORGE_GEN_RNG_HPP_

#include <cstdint>
#include <random>

namespace taskforge {

/// Portable random stream: std::mt19937_64 (whose output sequence is fixed
/// by the C++ standard) with hand-rolled conversions, since the standard
/// distributions are implementation-defined. Same seed, same numbers on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over (master, index): stream seeds for workers and
/// tasks that are independent of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace taskforge

#endif  // TASKFORGE_GEN_RNG_HPP_
