#pragma once

// Index-range fan-out over std::thread.  Workers write to disjoint,
// pre-sized slots, so results are identical for any worker count; the
// BALWORD_THREADS environment variable overrides the default.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace balword {

inline unsigned worker_count() {
    if (const char* env = std::getenv("BALWORD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? hw : 1;
}

// Calls fn(lo, hi) on contiguous blocks covering [begin, end).
template <class Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, Fn&& fn, unsigned workers = 0) {
    if (begin >= end) return;
    if (workers == 0) workers = worker_count();
    const std::uint64_t total = end - begin;
    if (workers <= 1 || total == 1) {
        fn(begin, end);
        return;
    }
    if (workers > total) workers = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = total / workers, extra = total % workers;
    std::uint64_t lo = begin;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

}  // namespace balword
