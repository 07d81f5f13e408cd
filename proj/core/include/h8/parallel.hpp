#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace h8 {

// 0 means "use what the machine has"; always at least one worker
inline unsigned effective_workers(unsigned requested) {
    if (requested)
        return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Runs body(0..chunk_count-1) on up to `workers` threads. Chunking is fixed by
// the caller, so results merged in chunk order are identical no matter how many
// workers actually run (including the single-core fallback, which is a plain
// loop). The first exception thrown by any chunk is rethrown on this thread.
inline void parallel_chunks(std::size_t chunk_count, unsigned workers,
                            const std::function<void(std::size_t)>& body) {
    workers = effective_workers(workers);
    if (workers <= 1 || chunk_count <= 1) {
        for (std::size_t i = 0; i < chunk_count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= chunk_count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };

    std::size_t n = std::min<std::size_t>(workers, chunk_count);
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w)
        pool.emplace_back(run);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace h8
