#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mes {

// Worker-thread count: MES_THREADS env var, else 1.
inline int default_threads() {
    if (const char* env = std::getenv("MES_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

// fn(i) for i in [0, n). fn must be pure or write only to slot i of shared
// state: batches are claimed dynamically, so execution order varies while
// results stay deterministic.
template <class F>
void parallel_for(size_t n, int threads, F&& fn) {
    if (threads < 2 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    size_t nw = std::min<size_t>(static_cast<size_t>(threads), n);
    pool.reserve(nw);
    for (size_t t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace mes
