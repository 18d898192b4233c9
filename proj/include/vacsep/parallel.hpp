// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace vacsep {

/// Runs fn(i) for i in [0, count) on up to `workers` threads with a fixed
/// strided assignment. fn must only write to state owned by index i.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  const auto n = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), count));
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (unsigned w = 0; w < n; ++w)
    pool.emplace_back([&fn, w, n, count] {
      for (std::size_t i = w; i < count; i += n) fn(i);
    });
}

}  // namespace vacsep
