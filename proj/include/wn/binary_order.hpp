#pragma once

#include "wn/arith.hpp"

#include <cstdint>
#include <vector>

namespace wn {

/// Largest supported ambient dimension; tuples have 2^n - 1 entries.
inline constexpr unsigned kMaxDimension = 16;

/// True when every bit of l is also set in h.
inline constexpr bool dominated(std::uint32_t l, std::uint32_t h) { return (l & ~h) == 0; }

inline constexpr bool comparable(std::uint32_t a, std::uint32_t b) {
  return dominated(a, b) || dominated(b, a);
}

inline constexpr std::uint32_t full_index(unsigned n) { return (std::uint32_t{1} << n) - 1; }

inline constexpr unsigned popcount(std::uint32_t h) {
  unsigned c = 0;
  for (; h; h &= h - 1) ++c;
  return c;
}

/// A nonempty subset of {1, ..., n} encoded by its binary digits.
class SubsetIndex {
 public:
  SubsetIndex(unsigned n, std::uint32_t h);

  static SubsetIndex singleton(unsigned n, unsigned j);
  /// The initial segment {1, ..., j}.
  static SubsetIndex initial(unsigned n, unsigned j);
  static SubsetIndex full(unsigned n) { return SubsetIndex(n, full_index(n)); }

  unsigned n() const { return n_; }
  std::uint32_t value() const { return h_; }
  /// epsilon_j(h) for j in [1, n].
  unsigned bit(unsigned j) const;
  unsigned weight() const { return popcount(h_); }

  bool operator==(const SubsetIndex&) const = default;

 private:
  unsigned n_;
  std::uint32_t h_;
};

enum class Dominance { equal, second_dominated, first_dominated, incomparable };

/// Relation between h and l; second_dominated means l is below h.
Dominance subset_relation(const SubsetIndex& h, const SubsetIndex& l);

const char* to_string(Dominance d);

/// Indices of [1, 2^n - 1] ordered by descending weight, ascending value within a weight.
std::vector<std::uint32_t> descending_weight_order(unsigned n);

/// Dense tuple indexed by h in [1, 2^n - 1]; slot h - 1 holds z_h.
template <class Int>
struct ZTuple {
  unsigned n = 0;
  std::vector<Int> z;

  ZTuple() = default;
  explicit ZTuple(unsigned dim) : n(dim), z(full_index(dim), Int(1)) {}
  ZTuple(unsigned dim, std::vector<Int> values) : n(dim), z(std::move(values)) {
    require(z.size() == full_index(dim), "tuple length must be 2^n - 1");
  }

  Int& operator[](std::uint32_t h) { return z[h - 1]; }
  const Int& operator[](std::uint32_t h) const { return z[h - 1]; }
  bool operator==(const ZTuple&) const = default;
};

template <class Int>
struct YTuple {
  unsigned n = 0;
  std::vector<Int> y;
  Int lcm;
};

using ReducedTuple = ZTuple<BigInt>;

namespace detail {
inline void check_dimension(unsigned n) {
  require(n >= 2 && n <= kMaxDimension, "dimension out of range");
}
}  // namespace detail

template <class Int>
bool is_reduced(const ZTuple<Int>& t) {
  detail::check_dimension(t.n);
  require(t.z.size() == full_index(t.n), "tuple length must be 2^n - 1");
  const std::uint32_t N = full_index(t.n);
  for (std::uint32_t h = 1; h <= N; ++h) {
    require(t[h] >= 1, "tuple entries must be positive");
    if (t[h] == 1) continue;
    for (std::uint32_t l = h + 1; l <= N; ++l) {
      if (!comparable(h, l) && gcd_of(t[h], t[l]) != 1) return false;
    }
  }
  return true;
}

/// Unique reduced z with y_j equal to the product of z_h over h containing j.
template <class Int>
ZTuple<Int> factorize(const std::vector<Int>& y) {
  const auto n = static_cast<unsigned>(y.size());
  detail::check_dimension(n);
  for (const Int& v : y) require(v >= 1, "y entries must be positive");

  ZTuple<Int> out(n);
  // above[j] is the product of the z_l already fixed with j in l.
  std::vector<Int> above(n, Int(1));
  std::vector<std::uint32_t> level;
  for (unsigned k = n; k >= 1; --k) {
    level.clear();
    for (std::uint32_t h = 1; h <= full_index(n); ++h)
      if (popcount(h) == k) level.push_back(h);
    for (std::uint32_t h : level) {
      Int g(0);
      for (unsigned j = 0; j < n; ++j)
        if (h >> j & 1u) g = gcd_of(g, Int(y[j] / above[j]));
      out[h] = g;
    }
    for (std::uint32_t h : level)
      for (unsigned j = 0; j < n; ++j)
        if (h >> j & 1u) above[j] *= out[h];
  }
  return out;
}

template <class Int>
std::vector<Int> compose_unchecked(const ZTuple<Int>& t) {
  std::vector<Int> y(t.n, Int(1));
  for (std::uint32_t h = 1; h <= full_index(t.n); ++h)
    if (t[h] != 1)
      for (unsigned j = 0; j < t.n; ++j)
        if (h >> j & 1u) y[j] *= t[h];
  return y;
}

/// Inverse of factorize; rejects tuples that are not reduced.
template <class Int>
YTuple<Int> compose(const ZTuple<Int>& t) {
  require(is_reduced(t), "compose requires a reduced tuple");
  YTuple<Int> out{t.n, compose_unchecked(t), Int(1)};
  for (const Int& v : t.z) out.lcm *= v;
  return out;
}

}  // namespace wn
