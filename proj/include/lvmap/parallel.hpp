#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lvmap {

/// Runs fn(index, worker) for every index in [0, count) on up to `threads`
/// workers. Work is claimed in chunks from a shared counter, so callers must
/// not depend on which worker handles which index. The first exception
/// thrown by fn is rethrown after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn, std::size_t chunk = 16) {
    const unsigned workers = static_cast<unsigned>(
        std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, std::max<std::size_t>(1, (count + chunk - 1) / chunk)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&](unsigned worker) {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= count) break;
                const std::size_t end = std::min(count, begin + chunk);
                for (std::size_t i = begin; i < end; ++i) fn(i, worker);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    pool.clear();
    if (error) std::rethrow_exception(error);
}

}  // namespace lvmap
