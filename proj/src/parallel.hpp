#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace wedge {

// Runs fn(i) for i in [0, count) across up to jobs threads. fn must be safe
// to call concurrently for distinct i.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count;
             i = next.fetch_add(1))
            fn(i);
    };
    std::vector<std::thread> pool;
    int n = std::min<std::size_t>(jobs, count);
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

}  // namespace wedge
