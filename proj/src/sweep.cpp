#include "cthopf/sweep.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cthopf::sweep {

Mode& default_mode() {
    static Mode m = Mode::Parallel;
    return m;
}

void set_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok, Mode mode) {
    if (mode == Mode::Serial) {
        for (std::size_t i = 0; i < n; ++i)
            if (!ok(i)) return i;
        return std::nullopt;
    }
    std::atomic<std::size_t> best{n};
#ifdef _OPENMP
    const long long chunk =
        std::max<long long>(1, static_cast<long long>(n) / (8 * omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, chunk)
#endif
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        if (i >= best.load(std::memory_order_relaxed)) continue;  // a lower failure is already known
        if (!ok(i)) {
            std::size_t cur = best.load(std::memory_order_relaxed);
            while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
            }
        }
    }
    std::size_t b = best.load();
    if (b == n) return std::nullopt;
    return b;
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok) {
    return first_failure(n, ok, default_mode());
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> out;
    if (k >= n) {
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = i;
        return out;
    }
    // Knuth selection sampling: visits indices in order, keeps the draw
    // reproducible for a given seed.
    std::mt19937_64 rng(seed);
    std::size_t needed = k;
    for (std::size_t i = 0; i < n && needed > 0; ++i) {
        std::uint64_t r = rng() % (n - i);
        if (r < needed) {
            out.push_back(i);
            --needed;
        }
    }
    return out;
}

}  // namespace cthopf::sweep
