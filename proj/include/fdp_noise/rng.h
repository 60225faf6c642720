// Copyright 2026 The fdp-noise Authors
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

#ifndef FDP_NOISE_RNG_H_
#define FDP_NOISE_RNG_H_

#include <cstdint>

namespace fdp_noise {

// Counter-based uniform stream: draw i is a SplitMix64 finalization of
// seed + (i + 1) * golden-gamma. Every draw is a pure function of
// (seed, index), so streams are reproducible and can be split by index.
class CounterUniform {
 public:
  explicit CounterUniform(uint64_t seed) : seed_(seed) {}

  uint64_t Bits(uint64_t index) const;

  // Uniform on the open interval (0, 1) with 53 random bits.
  double Uniform(uint64_t index) const;

  // Sequential convenience wrapper.
  double Next() { return Uniform(counter_++); }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace fdp_noise

#endif  // FDP_NOISE_RNG_H_
