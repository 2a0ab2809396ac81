#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace slab {

// --threads 0 means "pick": STRICHARTZ_LAB_THREADS, else hardware.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("STRICHARTZ_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// fn(i) for i in [0, n), split across threads.  Each index is
// independent and carries its own seed, so the result does not depend
// on the schedule.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    threads = std::min<std::size_t>(std::max(threads, 1), n ? n : 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([=] {
            for (std::size_t i = t; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace slab
