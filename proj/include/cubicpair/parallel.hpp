#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cubicpair {

// Worker count: CUBICPAIR_THREADS, 0 or unset means hardware concurrency.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("CUBICPAIR_THREADS");
    if (env == nullptr) return hw;
    long v = std::atol(env);
    if (v <= 0) return hw;
    return static_cast<unsigned>(v);
}

// Runs fn(chunk_index) for chunk_index in [0, chunks). The chunk layout is
// independent of the worker count, so callers that derive per-chunk state
// (seeds, output slots) get identical results at any thread setting.
inline void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || chunks <= 1) {
        for (std::size_t i = 0; i < chunks; ++i) fn(i);
        return;
    }
    if (workers > chunks) workers = static_cast<unsigned>(chunks);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < chunks; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace cubicpair
