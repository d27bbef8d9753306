#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace tourist {

// Worker count for parallel_for. TOURIST_THREADS overrides the hardware
// default; value 1 forces serial execution.
inline int worker_count() {
    if (const char* env = std::getenv("TOURIST_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned int hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {
inline thread_local bool inside_parallel_region = false;
}

// Runs fn(i) for i in [0, n). fn must only touch state owned by index i, so
// results are identical to a serial loop regardless of scheduling. Nested
// calls run serially on their worker. The first exception thrown by any
// worker is rethrown on the caller.
template <typename F>
void parallel_for(long n, F&& fn) {
    if (n <= 0) return;
    const int workers = detail::inside_parallel_region ? 1 : worker_count();
    if (workers <= 1 || n == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    const int used = static_cast<int>(std::min<long>(workers, n));
    pool.reserve(used);
    for (int w = 0; w < used; ++w) {
        pool.emplace_back([&]() {
            detail::inside_parallel_region = true;
            for (;;) {
                long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace tourist
