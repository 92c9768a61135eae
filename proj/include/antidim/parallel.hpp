#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace antidim {

/// 0 means "one worker per hardware thread".
inline auto resolve_threads(unsigned requested) -> unsigned
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(index, worker) for every index in [0, count), handing indices
/// out in increasing order to `threads` workers. The first exception thrown
/// by any worker is rethrown once all workers have stopped.
template <typename Body>
auto parallel_for(std::size_t count, unsigned threads, Body && body) -> void
{
    auto workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i, 0u);
        return;
    }

    std::atomic<std::size_t> next{ 0 };
    std::atomic<bool> failed{ false };
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&](unsigned worker) {
        for (std::size_t i; ! failed.load(std::memory_order_relaxed) && (i = next.fetch_add(1)) < count;) {
            try {
                body(i, worker);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(run, w);
    run(0);
    for (auto & t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace antidim
