#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cospec {

// Worker cap: COSPEC_THREADS if set, otherwise hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("COSPEC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(worker_id, begin, end) over a static partition of [0, n).
// Callers keep per-worker buffers and merge them in worker order, so results
// stay deterministic regardless of scheduling.
template <class F>
void parallel_chunks(std::size_t n, F&& f) {
    int workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
    if (workers <= 1) {
        f(0, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t b = std::min(n, w * chunk);
        std::size_t e = std::min(n, b + chunk);
        pool.emplace_back([&, w, b, e] { f(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cospec
