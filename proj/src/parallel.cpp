// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace occu {

namespace {
std::atomic<std::size_t> g_threads{1};

std::size_t resolve(std::size_t n) {
    if (n != 0) return n;
    const auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}
} // namespace

void set_num_threads(std::size_t n) { g_threads.store(resolve(n)); }

std::size_t num_threads() { return g_threads.load(); }

void parallel_for(std::size_t n, std::size_t min_chunk,
                  const std::function<void(std::size_t, std::size_t)> &fn) {
    if (n == 0) return;
    min_chunk = std::max<std::size_t>(min_chunk, 1);
    const std::size_t workers =
        std::min(num_threads(), (n + min_chunk - 1) / min_chunk);
    if (workers <= 1) {
        fn(0, n);
        return;
    }

    // Over-decompose so uneven chunks balance; chunk boundaries only depend
    // on n and the worker count.
    const std::size_t chunks = std::min(n, workers * 4);
    const std::size_t step = (n + chunks - 1) / chunks;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            const std::size_t begin = c * step;
            if (begin >= n) return;
            try {
                fn(begin, std::min(n, begin + step));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error) std::rethrow_exception(error);
}

} // namespace occu
