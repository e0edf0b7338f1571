#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sinesum {

// Number of worker threads: SINESUM_THREADS if set, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* s = std::getenv("SINESUM_THREADS")) {
        long v = std::strtol(s, nullptr, 10);
        if (v >= 1 && v <= 256) return (unsigned)v;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

// Runs fn(i) for i in [0, n) on a transient worker pool with dynamic
// (work-stealing-style) index assignment.  Each index's computation must be
// independent; callers store results into a pre-sized vector slot i, so the
// gathered output is in index order regardless of completion order and
// identical across thread counts.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         unsigned threads = 0) {
    if (threads == 0) threads = worker_count();
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = threads < n ? threads : (unsigned)n;
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace sinesum
