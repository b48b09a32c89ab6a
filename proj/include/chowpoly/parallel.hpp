#pragma once

// Deterministic parallel reduction over an indexed task list. Task results are
// combined in index order regardless of which worker produced them, so exact
// sums come out identical for every thread count.
//
// The worker count is min(hardware threads, CHOW_THREADS) when that variable
// is set to a positive integer.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace chowpoly {

inline std::size_t thread_count()
{
    std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CHOW_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return std::min(hw, static_cast<std::size_t>(v));
        } catch (const std::exception&) {
        }
    }
    return hw;
}

template <class T, class Task, class Combine>
T parallel_fold(std::size_t n_tasks, T init, Task&& task, Combine&& combine)
{
    const std::size_t workers = std::min(thread_count(), n_tasks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) combine(init, task(i));
        return init;
    }

    std::vector<std::optional<T>> results(n_tasks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n_tasks; i = next++) {
                    try {
                        results[i].emplace(task(i));
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        next = n_tasks;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
    for (auto& r : results) combine(init, std::move(*r));
    return init;
}

}  // namespace chowpoly
