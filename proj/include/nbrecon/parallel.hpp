/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_PARALLEL_HPP
#define NBRECON_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nbrecon {

// Run fn(i) for i in [begin, end) on up to `threads` workers. Each index is
// processed exactly once; fn must only write state owned by its index, so
// results never depend on the scheduling. Exceptions are re-thrown in the
// calling thread.
template <typename Fn>
void parallel_for(size_t begin, size_t end, unsigned threads, Fn&& fn) {
    if (end <= begin)
        return;
    const size_t total = end - begin;
    if (threads <= 1 || total == 1) {
        for (size_t i = begin; i < end; ++i)
            fn(i);
        return;
    }

    const size_t chunk = 16;
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const size_t start = next.fetch_add(chunk);
            if (start >= total || failed.load(std::memory_order_relaxed))
                return;
            const size_t stop = std::min(start + chunk, total);
            try {
                for (size_t i = start; i < stop; ++i)
                    fn(begin + i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned n_workers = std::min<size_t>(threads, total);
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failed.load())
        std::rethrow_exception(error);
}

} // namespace nbrecon

#endif
