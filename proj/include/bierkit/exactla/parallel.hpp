#pragma once

#include <cstddef>
#include <functional>

namespace bierkit::exactla {

// Worker count: BIERKIT_THREADS if set to a positive integer, else the
// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
/// index runs exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bierkit::exactla
