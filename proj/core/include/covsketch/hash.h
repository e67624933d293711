// Copyright 2026 The Authors.
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

#ifndef COVSKETCH_HASH_H_
#define COVSKETCH_HASH_H_

#include <cstdint>

namespace covsketch {

// Seeded hash of element ids onto [0, 1). Values are a deterministic
// function of (seed, key) and look independent across keys.
//
// Implicit expansions hash each element copy (element, copy) separately, and
// the probabilistic expansion additionally draws one coin per (element, copy,
// set) from a separate stream. Copy 0 of an element hashes exactly like the
// element itself, so a unit-weight expansion reproduces the plain sketch.
class HashSource {
 public:
  explicit HashSource(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }

  double ElementHash(int64_t element) const { return CopyHash(element, 0); }
  double CopyHash(int64_t element, int64_t copy) const;
  double EdgeCoin(int64_t element, int64_t copy, int64_t set) const;

 private:
  uint64_t seed_;
};

// Mixes 64 bits into 64 bits (the splitmix64 finalizer).
uint64_t Mix64(uint64_t x);

// Top 53 bits of `bits` as a double in [0, 1).
double ToUnitInterval(uint64_t bits);

}  // namespace covsketch

#endif  // COVSKETCH_HASH_H_
