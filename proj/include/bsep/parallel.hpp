#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace bsep {

// Worker count: BSEP_WORKERS env var, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("BSEP_WORKERS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Deterministic parallel map: each index writes only its own slot, so the
// result is identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([=] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace bsep
