#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace hctc {

/// Number of worker threads used by grid scans. 0 restores the default
/// (hardware concurrency). Results never depend on this value.
void set_worker_threads(unsigned count) noexcept;
unsigned worker_threads() noexcept;

/// Calls body(i) for i in [0, count), splitting the range into contiguous
/// blocks across worker threads. If any call throws, the exception from the
/// smallest failing index is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hctc
