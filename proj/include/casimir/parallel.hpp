#pragma once

#include <cstddef>
#include <functional>

namespace casimir {

/// Worker count from CASIMIR_THREADS, else the hardware concurrency (>= 1).
std::size_t worker_count();

/// Runs body(shard) for shard = 0..shards-1 on up to worker_count() threads.
/// The first exception thrown by any shard is rethrown after all threads join.
void run_sharded(std::size_t shards, const std::function<void(std::size_t)>& body);

}  // namespace casimir
