#pragma once

// Minimal deterministic parallel-for: static block partition over a fixed
// index range. Results must be written to preassigned slots so the output is
// independent of the number of worker threads.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace torusync::detail {

inline unsigned worker_count() {
    if (const char* env = std::getenv("TORUSYNC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

template <typename Fn>
void parallel_for(long begin, long end, Fn&& body) {
    long n = end - begin;
    if (n <= 0) return;
    unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
    if (workers <= 1) {
        for (long k = begin; k < end; ++k) body(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    long chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        long lo = begin + static_cast<long>(w) * chunk;
        long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (long k = lo; k < hi; ++k) body(k);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace torusync::detail
