#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cthopf::sweep {

enum class Mode { Serial, Parallel };

/// Process-wide default used by the verifiers; the CLI flips it.
Mode& default_mode();
/// Requested worker count; 0 keeps the OpenMP default.
void set_jobs(int jobs);

/// Scans i = 0..n-1 for the first index where ok(i) is false. ok must be
/// pure; both modes return the lowest violating index, so reports are
/// identical regardless of parallelism.
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok, Mode mode);
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok);

/// Deterministic sample of k distinct indices out of n in increasing order
/// (selection sampling driven by a fixed-seed generator).
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace cthopf::sweep
