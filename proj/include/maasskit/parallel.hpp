#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace maasskit {

inline std::size_t worker_count() {
    if (const char* env = std::getenv("MAASSKIT_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<std::size_t>(n);
    }
    std::size_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Static-partition parallel loop over [0, n); fn must be safe to call from any
// thread on disjoint indices.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min(worker_count(), n ? n : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace maasskit
