#include "wn/lattice_count.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wn {

namespace {

constexpr std::int64_t kSafeMagnitude = std::int64_t{1} << 62;

std::int64_t checked_abs(std::int64_t v) {
  require(v != std::numeric_limits<std::int64_t>::min(), "coefficient magnitude too large");
  return v < 0 ? -v : v;
}

// Counts (a, b) with |a| <= La, |b| <= Lb and ca*a + cb*b = T for ca, cb > 0.
class PairSolver {
 public:
  PairSolver(std::int64_t ca, std::int64_t cb, std::int64_t La, std::int64_t Lb)
      : La_(La), Lb_(Lb) {
    g_ = std::gcd(ca, cb);
    ca_ = ca / g_;
    cb_ = cb / g_;
    inv_ = mod_inverse(ca_ % cb_, cb_);
  }

  std::int64_t operator()(std::int64_t T) const {
    if (T % g_ != 0) return 0;
    const std::int64_t t = T / g_;
    const auto a0 = static_cast<std::int64_t>(
        static_cast<Wide>(((t % cb_) + cb_) % cb_) * inv_ % cb_);
    const auto b0 = static_cast<std::int64_t>(
        (static_cast<Wide>(t) - static_cast<Wide>(ca_) * a0) / cb_);
    const std::int64_t lo = std::max(ceil_div(-La_ - a0, cb_), ceil_div(b0 - Lb_, ca_));
    const std::int64_t hi = std::min(floor_div(La_ - a0, cb_), floor_div(b0 + Lb_, ca_));
    return hi >= lo ? hi - lo + 1 : 0;
  }

 private:
  std::int64_t La_, Lb_, g_ = 1, ca_ = 1, cb_ = 1, inv_ = 0;
};

class BoxCounter {
 public:
  BoxCounter(std::vector<std::int64_t> c, std::vector<std::int64_t> L)
      : c_(std::move(c)), L_(std::move(L)), reach_(c_.size() + 1, 0),
        pair_(c_[c_.size() - 2], c_.back(), L_[L_.size() - 2], L_.back()) {
    for (std::size_t k = c_.size(); k-- > 0;) reach_[k] = reach_[k + 1] + c_[k] * L_[k];
  }

  std::int64_t count(std::size_t k, std::int64_t T) const {
    if (k + 2 == c_.size()) return pair_(T);
    const std::int64_t c = c_[k];
    const std::int64_t R = reach_[k + 1];
    const std::int64_t lo = std::max(-L_[k], ceil_div(T - R, c));
    const std::int64_t hi = std::min(L_[k], floor_div(T + R, c));
    std::int64_t total = 0;
    for (std::int64_t v = lo; v <= hi; ++v) total += count(k + 1, T - c * v);
    return total;
  }

 private:
  std::vector<std::int64_t> c_, L_, reach_;
  PairSolver pair_;
};

}  // namespace

std::vector<std::int64_t> to_int64(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const BigInt& x : v) {
    if (!x.fits_slong_p()) throw ResourceLimit("coefficient exceeds 64-bit range");
    out.push_back(x.get_si());
  }
  return out;
}

std::int64_t count_linear_box(std::span<const std::int64_t> coeff,
                              std::span<const std::int64_t> bound, std::int64_t target) {
  require(coeff.size() == bound.size(), "coefficient and bound lengths differ");
  std::int64_t free_factor = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;  // (bound, |coeff|)
  Wide reach = checked_abs(target);
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    require(bound[i] >= 0, "bounds must be nonnegative");
    if (bound[i] == 0) continue;
    if (coeff[i] == 0) {
      free_factor *= 2 * bound[i] + 1;
      continue;
    }
    const std::int64_t a = checked_abs(coeff[i]);
    reach += static_cast<Wide>(a) * bound[i];
    terms.emplace_back(bound[i], a);
  }
  if (reach >= kSafeMagnitude) throw ResourceLimit("linear form exceeds 64-bit working range");

  if (terms.empty()) return target == 0 ? free_factor : 0;
  if (terms.size() == 1) {
    const auto [L, a] = terms[0];
    return (target % a == 0 && checked_abs(target / a) <= L) ? free_factor : 0;
  }
  // Enumerate the short ranges and leave the two widest for the closed form.
  std::stable_sort(terms.begin(), terms.end());
  std::vector<std::int64_t> c, L;
  for (const auto& [b, a] : terms) {
    L.push_back(b);
    c.push_back(a);
  }
  return free_factor * BoxCounter(std::move(c), std::move(L)).count(0, target);
}

std::int64_t count_linear_cube(std::span<const std::int64_t> coeff, std::int64_t X) {
  require(X >= 0, "X must be nonnegative");
  std::vector<std::int64_t> L(coeff.size(), X);
  return count_linear_box(coeff, L, 0);
}

std::int64_t count_progression(std::int64_t c, std::int64_t t, std::int64_t m, std::int64_t X) {
  require(m >= 1 && X >= 0, "invalid progression");
  c %= m;
  t %= m;
  const std::int64_t g = std::gcd(c < 0 ? -c : c, m);
  if (t % g != 0) return 0;
  const std::int64_t mm = m / g;
  const std::int64_t cc = ((c / g) % mm + mm) % mm;
  const std::int64_t tt = ((t / g) % mm + mm) % mm;
  const auto a0 =
      static_cast<std::int64_t>(static_cast<Wide>(tt) * mod_inverse(cc, mm) % mm);
  return floor_div(X - a0, mm) - ceil_div(-X - a0, mm) + 1;
}

std::int64_t count_A_exact(const ReducedTuple& z, std::int64_t X) {
  require(X >= 0, "X must be nonnegative");
  if (X == 0) return 1;
  const auto d = to_int64(lattice_coefficients(z).d);
  return count_linear_cube(d, X);
}

std::int64_t count_congruence(const ReducedTuple& z, unsigned r, std::int64_t X) {
  const unsigned n = z.n;
  require(r >= 1 && r + 1 <= n, "r must lie in [1, n-1]");
  require(X >= 0, "X must be nonnegative");
  const auto lc = lattice_coefficients(z);
  const auto d = to_int64(lc.d);
  if (!lc.d1r[r].fits_slong_p()) throw ResourceLimit("modulus exceeds 64-bit range");
  const std::int64_t M = lc.d1r[r].get_si();

  // The first free coordinate is counted as a progression, the rest enumerated.
  std::vector<std::int64_t> rest(d.begin() + r + 1, d.end());
  std::int64_t total = 0;
  auto walk = [&](auto&& self, std::size_t k, std::int64_t acc) -> void {
    if (k == rest.size()) {
      total += count_progression(d[r], -acc, M, X);
      return;
    }
    const std::int64_t c = rest[k] % M;
    for (std::int64_t v = -X; v <= X; ++v)
      self(self, k + 1, static_cast<std::int64_t>((acc + static_cast<Wide>(c) * v) % M));
  };
  walk(walk, 0, 0);
  return total;
}

std::int64_t count_A_grid(std::span<const std::int64_t> d, std::int64_t X) {
  std::int64_t total = 0;
  auto walk = [&](auto&& self, std::size_t k, std::int64_t acc) -> void {
    if (k == d.size()) {
      total += acc == 0;
      return;
    }
    for (std::int64_t v = -X; v <= X; ++v) self(self, k + 1, acc + d[k] * v);
  };
  walk(walk, 0, 0);
  return total;
}

std::int64_t count_congruence_grid(std::span<const std::int64_t> d, std::int64_t modulus, unsigned r,
                                   std::int64_t X) {
  std::int64_t total = 0;
  auto walk = [&](auto&& self, std::size_t k, std::int64_t acc) -> void {
    if (k == d.size()) {
      total += acc % modulus == 0;
      return;
    }
    for (std::int64_t v = -X; v <= X; ++v) self(self, k + 1, acc + d[k] * v);
  };
  walk(walk, r, 0);
  return total;
}

Rational slab_volume(const std::vector<BigInt>& a, const BigInt& c) {
  const std::size_t m = a.size();
  require(m >= 1 && m <= 24, "slab dimension out of range");
  require(c >= 0, "slab bound must be nonnegative");
  BigInt A = 0, prod = 1;
  for (const BigInt& w : a) {
    require(w >= 1, "slab weights must be positive");
    A += w;
    prod *= w;
  }
  const Rational cube = Rational(BigInt(1) << static_cast<mp_bitcnt_t>(m));
  if (c >= A) return cube;

  // After alpha = 2u - 1 the slab becomes L <= sum a_i u_i <= U with u uniform on [0,1]^m.
  const Rational U = Rational(A + c, 2), L = Rational(A - c, 2);
  Rational acc = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    BigInt shift = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) shift += a[i];
    const int sign = popcount(mask) % 2 == 0 ? 1 : -1;
    for (const auto& [s, w] : {std::pair{U, 1}, std::pair{L, -1}}) {
      Rational x = s - shift;
      if (x <= 0) continue;
      Rational p = 1;
      for (std::size_t k = 0; k < m; ++k) p *= x;
      acc += (sign * w) * p;
    }
  }
  BigInt fact = 1;
  for (std::size_t k = 2; k <= m; ++k) fact *= static_cast<unsigned long>(k);
  Rational out = cube * acc / Rational(fact * prod);
  out.canonicalize();
  return out;
}

double slab_volume_real(std::vector<double> a, double c) {
  require(!a.empty(), "slab dimension must be positive");
  require(c >= 0, "slab bound must be nonnegative");
  double amax = 0, sum = 0;
  for (double w : a) {
    require(w >= 0 && std::isfinite(w), "slab weights must be finite and nonnegative");
    amax = std::max(amax, w);
    sum += w;
  }
  const double cube = std::ldexp(1.0, static_cast<int>(a.size()));
  if (c >= sum) return cube;

  // Coordinates with negligible weight are left free; they contribute a factor 2 each.
  std::vector<long double> w;
  for (double v : a)
    if (v > 1e-5 * amax) w.push_back(static_cast<long double>(v) / amax);
  const long double cc = static_cast<long double>(c) / amax;
  const double free_factor = std::ldexp(1.0, static_cast<int>(a.size() - w.size()));
  std::sort(w.begin(), w.end(), std::greater<>());

  long double vol;
  if (w.size() == 1) {
    vol = 2 * std::min<long double>(1, cc / w[0]);
  } else if (w.size() == 2) {
    const long double p = w[0], q = w[1];
    if (cc >= p + q)
      vol = 4;
    else if (cc >= p - q)
      vol = 4 - (p + q - cc) * (p + q - cc) / (p * q);
    else
      vol = 4 * cc / p;
  } else {
    long double A = 0, prod = 1, fact = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      A += w[i];
      prod *= w[i];
      fact *= static_cast<long double>(i + 1);
    }
    const long double U = (A + cc) / 2, L = (A - cc) / 2;
    long double acc = 0;
    const std::size_t m = w.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      long double shift = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) shift += w[i];
      const long double sign = popcount(mask) % 2 == 0 ? 1 : -1;
      const long double xu = U - shift, xl = L - shift;
      if (xu > 0) acc += sign * std::pow(xu, static_cast<int>(m));
      if (xl > 0) acc -= sign * std::pow(xl, static_cast<int>(m));
    }
    vol = std::ldexp(1.0L, static_cast<int>(m)) * acc / (fact * prod);
    vol = std::clamp<long double>(vol, 0, std::ldexp(1.0L, static_cast<int>(m)));
  }
  return static_cast<double>(vol) * free_factor;
}

Rational b_of_y(const ReducedTuple& z) {
  const auto lc = lattice_coefficients(z);
  std::vector<BigInt> weights(lc.d.begin() + 1, lc.d.end());
  return slab_volume(weights, lc.d[0]);
}

Rational asymptotic_A(const ReducedTuple& z, std::int64_t X) {
  require(X >= 1, "X must be positive");
  const auto lc = lattice_coefficients(z);
  std::vector<BigInt> weights(lc.d.begin() + 1, lc.d.end());
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(X), z.n - 1);
  Rational out = Rational(power) * slab_volume(weights, lc.d[0]) / Rational(lc.d[0]);
  out.canonicalize();
  return out;
}

}  // namespace wn
