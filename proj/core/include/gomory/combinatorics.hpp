// Copyright 2026 The Gomory Authors
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

#pragma once

#include <cstddef>
#include <vector>

#include "gomory/numeric.hpp"

namespace gomory {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
// Stops early when f returns false.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  IndexSet idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (!f(static_cast<const IndexSet&>(idx))) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline IndexSet index_set_from_mask(unsigned long mask, int n) {
  IndexSet out;
  for (int j = 0; j < n; ++j)
    if (mask & (1UL << j)) out.push_back(j);
  return out;
}

}  // namespace gomory
