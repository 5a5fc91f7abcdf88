#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace voganscan::detail {

/// Splits [0, n) into at most `jobs` contiguous chunks and runs
/// fn(chunk_index, begin, end) for each on its own thread. The first
/// exception thrown by any worker is rethrown after all threads join.
template <class Fn>
std::size_t parallel_chunks(std::size_t n, int jobs, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n));
    const std::size_t step = (n + workers - 1) / std::max<std::size_t>(workers, 1);
    if (workers <= 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return 1;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, w * step);
        const std::size_t end = std::min(n, begin + step);
        threads.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return workers;
}

}  // namespace voganscan::detail
