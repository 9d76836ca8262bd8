// Copyright 2026 The mstratio Authors.
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

// Seeded random streams.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Child streams are derived with SplitMix64 from (base seed,
// stream index), so trial i always sees the same numbers no matter which
// worker runs it. Uniform doubles are built from the top 53 bits of one
// engine draw instead of std::uniform_real_distribution, whose algorithm is
// implementation-defined.

#ifndef MSTRATIO_RNG_H_
#define MSTRATIO_RNG_H_

#include <cstdint>
#include <random>

namespace mstratio {

std::uint64_t SplitMix64(std::uint64_t x);

// Seed of child stream `index` under `base`.
std::uint64_t ChildSeed(std::uint64_t base, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(SplitMix64(seed)) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t Below(std::uint64_t bound);
  bool Bernoulli(double p) { return Uniform() < p; }

  Rng Child(std::uint64_t index) { return Rng(ChildSeed(NextU64(), index)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mstratio

#endif  // MSTRATIO_RNG_H_
