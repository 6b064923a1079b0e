#pragma once

#include <cstddef>
#include <functional>

namespace tmwords {

/// Worker count used by the parallel loops (>= 1). Defaults to the hardware
/// concurrency.
unsigned thread_count() noexcept;
/// 0 restores the default.
void set_thread_count(unsigned n) noexcept;

/// Calls body(i) for i in [0, count) on up to thread_count() workers. The
/// caller is responsible for writing results into per-index slots so that
/// the outcome does not depend on scheduling. The first exception thrown by
/// any body is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tmwords
