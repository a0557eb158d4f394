// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace occu {

/// Sets the process-wide worker count used by parallel_for. 0 selects
/// std::thread::hardware_concurrency().
void set_num_threads(std::size_t n);
std::size_t num_threads();

/// Calls fn(begin, end) over contiguous chunks of [0, n). Chunks are static
/// (independent of timing) so any per-index output is deterministic. Runs
/// inline when one thread is configured or n is small.
void parallel_for(std::size_t n, std::size_t min_chunk,
                  const std::function<void(std::size_t, std::size_t)> &fn);

} // namespace occu
