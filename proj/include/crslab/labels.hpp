#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>

#include "crslab/error.hpp"

namespace crslab {

inline constexpr std::size_t kMaxLatticeDim = 16;

// Element of [m]^k. Coordinates are addressed 1-based through coord(i) to
// match the index set [k]; operator[] is the 0-based view.
class LatticeVector {
 public:
  LatticeVector() = default;

  explicit LatticeVector(std::size_t k, int fill = 1) : dim_(checked_dim(k)) {
    std::fill_n(c_.begin(), dim_, static_cast<std::uint8_t>(fill));
  }

  LatticeVector(std::initializer_list<int> values) : dim_(checked_dim(values.size())) {
    std::size_t p = 0;
    for (int v : values) c_[p++] = static_cast<std::uint8_t>(v);
  }

  explicit LatticeVector(std::span<const int> values) : dim_(checked_dim(values.size())) {
    for (std::size_t p = 0; p < dim_; ++p) c_[p] = static_cast<std::uint8_t>(values[p]);
  }

  std::size_t dim() const noexcept { return dim_; }

  int operator[](std::size_t pos) const noexcept { return c_[pos]; }
  void set(std::size_t pos, int value) noexcept { c_[pos] = static_cast<std::uint8_t>(value); }

  int coord(int i) const noexcept { return c_[static_cast<std::size_t>(i - 1)]; }

  int max_component() const noexcept {
    int best = 0;
    for (std::size_t p = 0; p < dim_; ++p) best = std::max<int>(best, c_[p]);
    return best;
  }

  bool in_box(int m) const noexcept {
    for (std::size_t p = 0; p < dim_; ++p)
      if (c_[p] < 1 || c_[p] > m) return false;
    return true;
  }

  /// Position in the lexicographic listing of [m]^k (first coordinate most significant).
  std::size_t rank(int m) const noexcept {
    std::size_t r = 0;
    for (std::size_t p = 0; p < dim_; ++p) r = r * static_cast<std::size_t>(m) + (c_[p] - 1u);
    return r;
  }

  static LatticeVector unrank(std::size_t r, std::size_t k, int m) {
    LatticeVector v(k);
    for (std::size_t p = k; p-- > 0;) {
      v.c_[p] = static_cast<std::uint8_t>(r % static_cast<std::size_t>(m) + 1);
      r /= static_cast<std::size_t>(m);
    }
    return v;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t p = 0; p < dim_; ++p) {
      if (p) out += ',';
      out += std::to_string(c_[p]);
    }
    return out + ")";
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) noexcept {
    return a.dim_ == b.dim_ && std::equal(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin());
  }
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) noexcept {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin(),
                                                  b.c_.begin() + b.dim_);
  }

 private:
  static std::uint8_t checked_dim(std::size_t k) {
    if (k > kMaxLatticeDim)
      throw error(errc::size_overflow, "lattice dimension " + std::to_string(k) + " exceeds " +
                                           std::to_string(kMaxLatticeDim));
    return static_cast<std::uint8_t>(k);
  }

  std::array<std::uint8_t, kMaxLatticeDim> c_{};
  std::uint8_t dim_ = 0;
};

struct BaseVertex {
  int index = 1;
  auto operator<=>(const BaseVertex&) const = default;
};

struct PlainVertex {
  std::uint32_t id = 0;
  auto operator<=>(const PlainVertex&) const = default;
};

// Alternative order gives the canonical kind order: base < lattice < plain.
using VertexLabel = std::variant<BaseVertex, LatticeVector, PlainVertex>;

inline bool is_base(const VertexLabel& v) { return std::holds_alternative<BaseVertex>(v); }
inline bool is_lattice(const VertexLabel& v) { return std::holds_alternative<LatticeVector>(v); }
inline bool is_plain(const VertexLabel& v) { return std::holds_alternative<PlainVertex>(v); }

inline std::string to_string(const VertexLabel& v) {
  struct {
    std::string operator()(const BaseVertex& b) const { return "b" + std::to_string(b.index); }
    std::string operator()(const LatticeVector& x) const { return x.str(); }
    std::string operator()(const PlainVertex& p) const { return std::to_string(p.id); }
  } visitor;
  return std::visit(visitor, v);
}

}  // namespace crslab
