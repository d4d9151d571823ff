#ifndef CUBESLICE_PARALLEL_HPP
#define CUBESLICE_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace cubeslice {

/// Run fn(i) for i in [0, n) on `workers` threads. Work items must be
/// independent up to their own synchronization.
inline void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; i++) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto task = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int t = std::min<size_t>(workers, n);
    pool.reserve(t);
    for (int k = 0; k < t; k++) pool.emplace_back(task);
    for (auto& th : pool) th.join();
}

}  // namespace cubeslice

#endif
