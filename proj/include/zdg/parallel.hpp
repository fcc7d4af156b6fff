#ifndef ZDG_PARALLEL_HPP
#define ZDG_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace zdg {

/// Number of workers to actually use: 0 picks the hardware count, and the
/// result is clamped to [1, total].
inline unsigned resolve_workers(unsigned requested, std::size_t total) {
    unsigned w = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (w == 0) w = 1;
    if (total > 0 && w > total) w = static_cast<unsigned>(total);
    return w;
}

/// Run fn(worker, begin, end) over a fixed partition of [0, total) into
/// contiguous chunks, one per worker. The partition depends only on
/// (total, workers), so any output written per chunk and merged in worker
/// order is independent of scheduling.
template <typename Fn>
void parallel_chunks(std::size_t total, unsigned workers, Fn&& fn) {
    unsigned w = resolve_workers(workers, total);
    if (total == 0) return;
    if (w <= 1) {
        fn(0u, std::size_t(0), total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (unsigned t = 0; t < w; ++t) {
        std::size_t begin = total * t / w;
        std::size_t end = total * (t + 1) / w;
        threads.emplace_back([&fn, t, begin, end]() { fn(t, begin, end); });
    }
    for (auto& th : threads) th.join();
}

} // namespace zdg

#endif // ZDG_PARALLEL_HPP
