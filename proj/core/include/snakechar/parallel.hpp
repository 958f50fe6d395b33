#pragma once

/// @file parallel.hpp
/// @brief Deterministic fork-join helper for per-index work.
///
/// Results are merged in index order regardless of thread scheduling, so
/// the reduced value is identical for every thread count.

#include <cstddef>
#include <thread>
#include <vector>

namespace snakechar {

/// Effective worker count for a job of the given size.
inline int resolve_threads(int requested, std::size_t count) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    int t = requested > 0 ? requested : hw;
    if (static_cast<std::size_t>(t) > count) t = static_cast<int>(count);
    return t < 1 ? 1 : t;
}

/// Computes map_fn(i) for every i in [0, count) and folds the results into
/// init with merge_fn, in increasing index order.
///
/// map_fn must be safe to call concurrently; merge_fn runs on the calling
/// thread only.
template <class Result, class MapFn, class MergeFn>
Result parallel_map_reduce(std::size_t count, int threads, Result init,
                           MapFn map_fn, MergeFn merge_fn) {
    int workers = resolve_threads(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) merge_fn(init, map_fn(i));
        return init;
    }

    using Mapped = decltype(map_fn(std::size_t{0}));
    std::vector<std::vector<Mapped>> chunks(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            auto& local = chunks[static_cast<std::size_t>(w)];
            for (std::size_t i = static_cast<std::size_t>(w); i < count;
                 i += static_cast<std::size_t>(workers)) {
                local.push_back(map_fn(i));
            }
        });
    }
    for (auto& th : pool) th.join();

    // Replay in index order: chunk w holds indices w, w+workers, w+2*workers, ...
    std::vector<std::size_t> cursor(static_cast<std::size_t>(workers), 0);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t w = i % static_cast<std::size_t>(workers);
        merge_fn(init, std::move(chunks[w][cursor[w]]));
        ++cursor[w];
    }
    return init;
}

}  // namespace snakechar
