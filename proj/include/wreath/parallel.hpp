#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace wreath {

/// Splits [0, count) into at most `threads` contiguous chunks and runs
/// body(worker, begin, end) on each. Workers write to disjoint slots the
/// caller provides, then the caller merges in worker order, so results do
/// not depend on scheduling.
template <typename Body>
void parallel_chunks(std::size_t count, int threads, Body body) {
    if (threads < 1)
        threads = 1;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), count ? count : 1);
    if (workers <= 1) {
        body(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([=] { body(w, begin, end); });
    }
    for (auto& t : pool)
        t.join();
}

}  // namespace wreath
