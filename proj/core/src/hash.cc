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

#include "covsketch/hash.h"

namespace covsketch {
namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr uint64_t kCopySalt = 0x632be59bd9b4e019ULL;
constexpr uint64_t kEdgeSalt = 0xd6e8feb86659fd93ULL;

uint64_t Combine(uint64_t state, uint64_t value) {
  return Mix64(state ^ Mix64(value + kGolden));
}

}  // namespace

uint64_t Mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

double ToUnitInterval(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double HashSource::CopyHash(int64_t element, int64_t copy) const {
  const uint64_t key = Combine(Mix64(seed_ ^ kCopySalt),
                               static_cast<uint64_t>(element));
  return ToUnitInterval(Combine(key, static_cast<uint64_t>(copy)));
}

double HashSource::EdgeCoin(int64_t element, int64_t copy, int64_t set) const {
  uint64_t key = Combine(Mix64(seed_ ^ kEdgeSalt),
                         static_cast<uint64_t>(element));
  key = Combine(key, static_cast<uint64_t>(copy));
  return ToUnitInterval(Combine(key, static_cast<uint64_t>(set)));
}

}  // namespace covsketch
