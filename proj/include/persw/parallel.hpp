#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace persw {

/// Run fn(chunk_index, begin, end) over a contiguous partition of [0, n).
/// Chunks are fixed by (n, threads) alone, so per-chunk results merged in
/// chunk order are identical for every worker count.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    const std::size_t nchunks =
        std::min<std::size_t>(static_cast<std::size_t>(threads), n == 0 ? 1 : n);
    if (nchunks <= 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    const std::size_t base = n / nchunks, extra = n % nchunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        const std::size_t len = base + (c < extra ? 1 : 0);
        pool.emplace_back([&fn, c, begin, end = begin + len] { fn(c, begin, end); });
        begin += len;
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace persw
