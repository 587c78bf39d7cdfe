#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace crslab {

/// Splits [0, total) into `jobs` contiguous ranges and runs
/// body(begin, end, worker) on each, one thread per range. Results are
/// expected to be merged per worker by the caller, so output order never
/// depends on scheduling.
template <class Body>
void parallel_ranges(std::uint64_t total, unsigned jobs, Body&& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < jobs) {
    body(std::uint64_t{0}, total, 0u);
    return;
  }
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = std::min(total, chunk * w);
    const std::uint64_t end = std::min(total, begin + chunk);
    workers.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
}

}  // namespace crslab
