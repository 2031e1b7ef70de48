#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace fuzzylab {

/// Runs fn(i) for i in [0, n) on up to n_threads workers. Results must be
/// written to pre-sized slots indexed by i so the output order never depends
/// on the thread count. n_threads <= 0 means hardware concurrency.
inline void parallel_for(int n, int n_threads, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    if (n_threads <= 0) n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    n_threads = std::min(n_threads, n);
    if (n_threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t)
        pool.emplace_back([=, &fn] {
            for (int i = t; i < n; i += n_threads) fn(i);
        });
    for (std::thread& th : pool) th.join();
}

}  // namespace fuzzylab
