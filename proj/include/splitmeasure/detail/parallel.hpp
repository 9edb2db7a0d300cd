#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace splitmeasure::detail {

/// Runs body(worker, begin, end) on contiguous slices of [0, total), one thread per worker.
template <class Body>
void run_partitioned(std::uint64_t total, unsigned workers, Body body) {
    workers = std::max(1u, workers);
    if (workers == 1 || total < workers) {
        body(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> threads;
    const std::uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = (w + 1 == workers) ? total : begin + chunk;
        threads.emplace_back(body, w, begin, end);
    }
    for (auto& t : threads) t.join();
}

}  // namespace splitmeasure::detail
