#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace permclass {

/// Worker cap from PERMCLASS_THREADS (0 or unset means hardware concurrency).
inline std::size_t worker_count() {
    std::size_t cap = 0;
    if (const char* env = std::getenv("PERMCLASS_THREADS")) cap = std::strtoul(env, nullptr, 10);
    if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
    return cap;
}

/// Order-preserving filter; the input is split into contiguous chunks, one
/// per worker, and the kept elements are concatenated in input order.
template <class T, class Pred>
std::vector<T> parallel_filter(const std::vector<T>& items, Pred keep) {
    const std::size_t workers = std::min(worker_count(), items.size() / 256 + 1);
    if (workers <= 1) {
        std::vector<T> out;
        for (const T& x : items)
            if (keep(x)) out.push_back(x);
        return out;
    }
    std::vector<std::vector<T>> parts(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (items.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(items.size(), lo + chunk);
                for (std::size_t i = lo; i < hi; ++i)
                    if (keep(items[i])) parts[w].push_back(items[i]);
            });
        }
    }
    std::vector<T> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace permclass
