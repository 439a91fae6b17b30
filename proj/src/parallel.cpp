#include "hctc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace hctc {

namespace {

std::atomic<unsigned> g_threads{0};

}  // namespace

void set_worker_threads(unsigned count) noexcept { g_threads.store(count); }

unsigned worker_threads() noexcept {
    const unsigned n = g_threads.load();
    if (n != 0) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t workers = std::min<std::size_t>(worker_threads(), count);

    std::mutex mu;
    std::size_t failed_index = std::numeric_limits<std::size_t>::max();
    std::exception_ptr failure;

    auto run_block = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
                return;
            }
        }
    };

    if (workers == 1) {
        run_block(0, count);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back(run_block, t * count / workers, (t + 1) * count / workers);
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace hctc
