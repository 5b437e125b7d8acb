#pragma once

#include <cstddef>
#include <functional>

namespace fracgreen {

/// Worker count for library-internal parallel loops. Defaults to the
/// FRACGREEN_THREADS environment variable, else hardware concurrency.
std::size_t worker_count();
void set_worker_count(std::size_t n);  // 0 restores the default

/// Runs body(i) for i in [0, n) over a static block partition. Each index is
/// processed exactly once, so results written to index-owned slots are
/// independent of the schedule. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fracgreen
