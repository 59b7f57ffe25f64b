#ifndef LRCLAB_PARALLEL_HPP
#define LRCLAB_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace lrclab {

/// Worker count for internal parallelism, capped by LRCLAB_THREADS when set.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("LRCLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

/// Splits [0, n) into contiguous chunks, one per worker thread, and runs
/// fn(chunk_index, begin, end) on each.  Results must be merged by the caller
/// in chunk order so output stays identical to a sequential run.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
    unsigned workers = thread_budget();
    if (n == 0) return;
    if (workers > n) workers = static_cast<unsigned>(n);
    if (workers <= 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t base = n / workers, extra = n % workers, begin = 0;
    for (unsigned c = 0; c < workers; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        std::size_t end = begin + len;
        pool.emplace_back([&fn, c, begin, end] { fn(static_cast<std::size_t>(c), begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace lrclab

#endif
