#pragma once

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace affhecke {

// Worker count for independent checks: HECKE_THREADS if set (minimum 1),
// otherwise the hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("HECKE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count). Work is split into contiguous chunks and
// results must be written to index-addressed slots, so the outcome does not
// depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    unsigned budget = thread_budget();
    if (budget <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = budget;
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<unsigned>(count);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t lo = count * t / workers;
        std::size_t hi = count * (t + 1) / workers;
        futures.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        }));
    }
    for (auto& f : futures) f.get();
}

}  // namespace affhecke
