#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace crslab {

/// base^exp, or std::nullopt when the result does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

/// Visits the r-subsets of {0..n-1} in lexicographic order. The visitor
/// returns false to stop early; the function reports whether it ran to the end.
template <class Visitor>
bool for_each_combination(std::size_t n, std::size_t r, Visitor&& visit) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return false;
    std::size_t p = r;
    while (p > 0 && idx[p - 1] == n - r + p - 1) --p;
    if (p == 0) return true;
    ++idx[p - 1];
    for (std::size_t q = p; q < r; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace crslab
