// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace fqlcu {

/// Worker count: FQLCU_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for every i in [begin, end), split into contiguous chunks
/// over worker_count() threads. Runs inline when one worker suffices. The
/// first exception thrown by any chunk is rethrown after all threads join.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace fqlcu
