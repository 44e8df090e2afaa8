#pragma once
// Deterministic sweep parallelism: a work-stealing index loop whose results
// land in caller-owned slots, so output order never depends on scheduling.
// SCARF_THREADS caps the worker count.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace scarf {

inline int thread_budget() {
    const unsigned hw = std::thread::hardware_concurrency();
    int n = hw ? int(hw) : 1;
    if (const char* env = std::getenv("SCARF_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) n = int(v);
    }
    return n;
}

/// Runs fn(i) for i in [0, count) across the thread budget. fn must write
/// only to its own index's slot. The first exception thrown by any worker is
/// rethrown on the calling thread after the pool drains.
template <class Fn>
void parallel_for_indexed(std::size_t count, Fn&& fn, int threads = 0) {
    if (threads <= 0) threads = thread_budget();
    if (count == 0) return;
    if (std::size_t(threads) > count) threads = int(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(size_t(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace scarf
