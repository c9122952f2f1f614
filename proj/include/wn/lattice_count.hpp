#pragma once

#include "wn/arith.hpp"
#include "wn/binary_order.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wn {

/// Divisor products attached to a reduced tuple; vectors are indexed by r directly.
template <class Int>
struct LatticeCoefficients {
  unsigned n = 0;
  std::vector<Int> d;        ///< d[i - 1] = d_i
  std::vector<Int> d1r;      ///< d1r[r] = d_{1,r} for r in [1, n]
  std::vector<Int> d1_step;  ///< d1_step[r] = d_1^{(r-1)} for r in [2, n]
  std::vector<Int> dprime;   ///< dprime[r] = d'_r for r in [2, n]; dprime[1] = d'_1
};

namespace detail {
template <class Int, class Pred>
Int product_where(const ZTuple<Int>& t, Pred keep) {
  Int p(1);
  for (std::uint32_t h = 1; h <= full_index(t.n); ++h)
    if (keep(h)) p *= t[h];
  return p;
}
}  // namespace detail

/// All coefficient families for a reduced tuple; reducedness is not rechecked.
template <class Int>
LatticeCoefficients<Int> lattice_coefficients(const ZTuple<Int>& t) {
  const unsigned n = t.n;
  LatticeCoefficients<Int> c;
  c.n = n;
  c.d.resize(n);
  c.d1r.assign(n + 1, Int(1));
  c.d1_step.assign(n + 1, Int(1));
  c.dprime.assign(n + 1, Int(1));
  for (unsigned i = 1; i <= n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    const std::uint32_t before = full_index(i - 1);
    c.d[i - 1] = detail::product_where(t, [&](std::uint32_t h) { return (h & bit) == 0; });
    c.d1r[i] = detail::product_where(t, [&](std::uint32_t h) { return (h & full_index(i)) == 0; });
    if (i >= 2) {
      c.d1_step[i] = detail::product_where(
          t, [&](std::uint32_t h) { return (h & before) == 0 && (h & bit) != 0; });
      c.dprime[i] = detail::product_where(
          t, [&](std::uint32_t h) { return (h & bit) == 0 && (h & before) != 0; });
    }
  }
  c.dprime[1] = detail::product_where(t, [](std::uint32_t h) { return (h & 1u) == 0 && (h & 2u) != 0; });
  return c;
}

/// Number of integer points with |alpha_i| <= bound_i and sum coeff_i alpha_i = target.
/// Requires sum |coeff_i| bound_i + |target| < 2^62.
std::int64_t count_linear_box(std::span<const std::int64_t> coeff,
                              std::span<const std::int64_t> bound, std::int64_t target = 0);

/// Same count with every bound equal to X.
std::int64_t count_linear_cube(std::span<const std::int64_t> coeff, std::int64_t X);

/// Number of alpha in [-X, X] with c * alpha = t modulo m.
std::int64_t count_progression(std::int64_t c, std::int64_t t, std::int64_t m, std::int64_t X);

/// #A(y; X) for the tuple z.
std::int64_t count_A_exact(const ReducedTuple& z, std::int64_t X);

/// #A_r(y, X): alpha in [-X, X]^{n-r} with sum_{i>r} d_i alpha_i = 0 modulo d_{1,r}.
std::int64_t count_congruence(const ReducedTuple& z, unsigned r, std::int64_t X);

/// Brute-force grid counts used as oracles.
std::int64_t count_A_grid(std::span<const std::int64_t> d, std::int64_t X);
std::int64_t count_congruence_grid(std::span<const std::int64_t> d, std::int64_t modulus, unsigned r,
                                   std::int64_t X);

/// vol{alpha in [-1,1]^m : |sum a_i alpha_i| <= c}, exactly.
Rational slab_volume(const std::vector<BigInt>& a, const BigInt& c);

/// Real-weight analogue of slab_volume for nonnegative weights.
double slab_volume_real(std::vector<double> a, double c);

/// Slab volume with weights (d_2, ..., d_n) and bound d_1.
Rational b_of_y(const ReducedTuple& z);

/// X^{n-1} b(y) / d_1.
Rational asymptotic_A(const ReducedTuple& z, std::int64_t X);

/// Converts coefficients to machine integers, raising ResourceLimit when they do not fit.
std::vector<std::int64_t> to_int64(const std::vector<BigInt>& v);

}  // namespace wn
