#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace sparsenet {

inline unsigned default_thread_count() {
    if (const char* env = std::getenv("SPARSENET_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Static block partition of [begin, end); fn(worker_id, lo, hi).
inline void parallel_ranges(std::uint64_t begin, std::uint64_t end, unsigned threads,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (end <= begin) return;
    std::uint64_t total = end - begin;
    if (threads <= 1 || total < 2) {
        fn(0, begin, end);
        return;
    }
    if (threads > total) threads = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::uint64_t chunk = total / threads, rem = total % threads;
    std::uint64_t lo = begin;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t hi = lo + chunk + (t < rem ? 1 : 0);
        pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

} // namespace sparsenet
