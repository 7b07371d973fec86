#pragma once

#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fundcost {

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each, one
// chunk per worker. Results must be written to per-index slots by the caller;
// combined with fixed-order reductions this keeps every run bit-identical no
// matter how many threads are used.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads < 0) throw std::invalid_argument("parallel_for: negative thread count");
    std::size_t workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : static_cast<std::size_t>(threads);
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        fn(std::size_t{0}, n);
        return;
    }
    workers = std::min(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fundcost
