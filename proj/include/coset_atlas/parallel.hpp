#ifndef COSET_ATLAS_PARALLEL_HPP
#define COSET_ATLAS_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace coset_atlas {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, count) into contiguous chunks, one per worker. Each worker gets
// its own accumulator state; merge runs over the states in worker order, so
// the combined result does not depend on scheduling.
template <typename State, typename Body, typename Merge>
void parallel_chunks(std::size_t count, int jobs, Body body, Merge merge) {
    jobs = resolve_jobs(jobs);
    std::size_t workers = static_cast<std::size_t>(jobs);
    if (workers > count) workers = count == 0 ? 1 : count;

    std::vector<State> states(workers);
    if (workers <= 1) {
        body(std::size_t{0}, count, states[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk;
            std::size_t hi = lo + chunk < count ? lo + chunk : count;
            if (lo >= hi) {
                continue;
            }
            threads.emplace_back([&, lo, hi, w] { body(lo, hi, states[w]); });
        }
        for (auto& t : threads) t.join();
    }
    for (auto& st : states) merge(st);
}

} // namespace coset_atlas

#endif
