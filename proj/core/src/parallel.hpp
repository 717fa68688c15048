#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bmn::detail {

/// Runs fn(index, worker) for every index in [0, n) on `workers` threads,
/// handing out indices in small chunks. The first exception is rethrown.
template <class Fn>
void parallelFor(std::size_t n, unsigned workers, Fn&& fn, std::size_t chunk = 64) {
    workers = std::max(1u, workers);
    if (workers == 1 || n <= chunk) {
        for (std::size_t i = 0; i < n; ++i) fn(i, 0u);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failureMutex;
    auto body = [&](unsigned worker) {
        try {
            for (;;) {
                const std::size_t begin = cursor.fetch_add(chunk);
                if (begin >= n) return;
                const std::size_t end = std::min(n, begin + chunk);
                for (std::size_t i = begin; i < end; ++i) fn(i, worker);
            }
        } catch (...) {
            std::lock_guard lock(failureMutex);
            if (!failure) failure = std::current_exception();
            cursor.store(n);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body, w);
    body(0);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace bmn::detail
