#ifndef SOLVIR_PARALLEL_HPP
#define SOLVIR_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace solvir {

/// Splits [0, count) into contiguous chunks, runs fn(begin, end, result) on
/// up to `threads` worker threads and returns the per-chunk results in chunk
/// order. The chunking depends only on `count`, so the merged output does
/// not depend on the thread count.
template <class Result, class F>
std::vector<Result> parallel_chunks(std::size_t count, unsigned threads, F&& fn, std::size_t chunk = 4096)
{
    const std::size_t nchunks = count == 0 ? 0 : (count + chunk - 1) / chunk;
    std::vector<Result> results(nchunks);
    std::vector<std::exception_ptr> errors(nchunks);
    auto run = [&](std::size_t worker, std::size_t workers) {
        for (std::size_t i = worker; i < nchunks; i += workers) {
            try {
                fn(i * chunk, std::min(count, (i + 1) * chunk), results[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, nchunks));
    if (workers <= 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w, workers);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace solvir

#endif
