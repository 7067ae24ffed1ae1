#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace fdclutter {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(i) for i in [0, count) across up to `jobs` threads. Work items must
/// be independent; determinism is the caller's responsibility (per-index
/// random substreams, caller-ordered output slots).
inline void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> cursor{0};
    auto worker = [&] {
        const long chunk = 64;
        for (;;) {
            const long begin = cursor.fetch_add(chunk);
            if (begin >= count) break;
            const long end = std::min(begin + chunk, count);
            for (long i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int n = static_cast<int>(std::min<long>(jobs, count));
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace fdclutter
