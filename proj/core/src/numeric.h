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

#ifndef COVSKETCH_SRC_NUMERIC_H_
#define COVSKETCH_SRC_NUMERIC_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace covsketch::internal {

// ceil() that ignores floating-point noise just above an integer, so that
// e.g. (1 + 0.2) * 50 rounds to 60 rather than 61.
inline double CeilTolerant(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return nearest;
  }
  return std::ceil(x);
}

// Saturating conversion of a non-negative ceiling to int64.
inline int64_t CeilToInt64(double x) {
  const double c = CeilTolerant(x);
  if (!(c < 9.0e18)) return std::numeric_limits<int64_t>::max();
  return static_cast<int64_t>(c);
}

inline bool IsIntegral(double x) {
  return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x));
}

}  // namespace covsketch::internal

#endif  // COVSKETCH_SRC_NUMERIC_H_
