#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace darboux {

// Thread budget: DARBOUX_THREADS if set (>=1), else hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("DARBOUX_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

// Strided index-parallel loop. Each index writes its own slot, so results are
// identical for any thread count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t t = std::min<std::size_t>(thread_budget(), n);
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t k = 0; k < t; ++k) {
        pool.emplace_back([k, t, n, &fn] {
            for (std::size_t i = k; i < n; i += t) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace darboux
