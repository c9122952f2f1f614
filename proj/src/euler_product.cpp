#include "wn/constants.hpp"

#include <cmath>
#include <limits>

namespace wn {

namespace {

// Rigorous bound on sum_{p > P} |log R(1/p)| + |log(1 - p^{-n})| where R = 1 + sum_{k>=2} r_k X^k.
double log_tail_bound(const IntPolynomial& R, unsigned n, std::int64_t P, bool with_zeta_factor) {
  long double S = 0;
  for (unsigned k = 2; k <= static_cast<unsigned>(std::max(R.degree(), 1)); ++k)
    S += std::fabs(static_cast<long double>(R.coefficient(k).get_d()));
  // Beyond P0 every x = 1/p satisfies S x^2 <= 1/2, so |log R| <= 2 S x^2 and |log(1 - x^n)| <= 2 x^2.
  const long double weight = S + (with_zeta_factor ? 1 : 0);
  auto P0 = static_cast<std::int64_t>(std::ceil(std::sqrt(2 * S)));
  long double bound = 0;
  if (P0 > P) {
    for (std::int64_t p : primes_up_to(P0)) {
      if (p <= P) continue;
      const long double x = 1.0L / p;
      bound += std::fabs(std::log(std::fabs(R.evaluate(x))));
      if (with_zeta_factor) bound += std::fabs(std::log1p(-std::pow(x, static_cast<int>(n))));
    }
  } else {
    P0 = P;
  }
  // sum_{m > P0} 1/m^2 <= 1/P0.
  bound += 2 * weight / static_cast<long double>(P0);
  return static_cast<double>(bound) + 1e-15;
}

// R(x) - 1 without forming the constant term.
long double minus_one(const IntPolynomial& R, long double x) {
  long double acc = 0;
  for (int k = R.degree(); k >= 1; --k) acc = acc * x + static_cast<long double>(R.coefficient(k).get_d());
  return acc * x;
}

Interval from_log(long double log_value, double tail) {
  Interval out;
  out.value = static_cast<double>(std::exp(log_value));
  out.lower = static_cast<double>(std::exp(log_value - tail));
  out.upper = static_cast<double>(std::exp(log_value + tail));
  return out;
}

}  // namespace

Rational local_density(unsigned n, std::int64_t p) {
  require(n >= 1 && p >= 2, "invalid local density arguments");
  const Rational x(1, p);
  Rational out = local_factor_poly(n)(x);
  Rational xn = 1;
  for (unsigned k = 0; k < n; ++k) xn *= x;
  out *= 1 - xn;
  out.canonicalize();
  return out;
}

EulerProduct euler_product(unsigned n, std::int64_t prime_limit) {
  require(n >= 2 && n <= 12, "n out of range");
  require(prime_limit >= 2, "prime_limit must be at least 2");
  const IntPolynomial R = local_factor_poly(n);
  long double log_sum = 0;
  const auto primes = primes_up_to(prime_limit);
  for (std::int64_t p : primes) {
    const long double x = 1.0L / static_cast<long double>(p);
    log_sum += std::log1p(minus_one(R, x)) + std::log1p(-std::pow(x, static_cast<int>(n)));
  }
  EulerProduct out;
  out.n = n;
  out.prime_limit = prime_limit;
  out.primes = primes.size();
  out.log_tail_bound = log_tail_bound(R, n, prime_limit, true);
  out.value = from_log(log_sum, out.log_tail_bound);
  return out;
}

EulerProduct f_at_one(unsigned n, std::int64_t prime_limit) {
  require(n >= 2 && n <= 12, "n out of range");
  require(prime_limit >= 2, "prime_limit must be at least 2");
  const unsigned exponent = (1u << n) - 1;
  long double log_sum = 0;
  const auto primes = primes_up_to(prime_limit);
  for (std::int64_t p : primes) {
    const long double x = 1.0L / static_cast<long double>(p);
    // G_p - 1 = sum_{k>=1} ((k+1)^n - k^n) x^k, summed until the terms are negligible.
    long double g = 0, xk = 1;
    for (unsigned k = 1; k < 100000; ++k) {
      xk *= x;
      const long double term =
          (std::pow(static_cast<long double>(k + 1), n) - std::pow(static_cast<long double>(k), n)) * xk;
      g += term;
      if (term < 1e-22L * g && k > n) break;
    }
    log_sum += exponent * std::log1p(-x) + std::log1p(g);
  }
  EulerProduct out;
  out.n = n;
  out.prime_limit = prime_limit;
  out.primes = primes.size();
  out.log_tail_bound = log_tail_bound(local_factor_poly(n), n, prime_limit, false);
  out.value = from_log(log_sum, out.log_tail_bound);
  return out;
}

Interval zeta(unsigned n, double half_width) {
  require(n >= 2, "zeta needs n >= 2");
  require(half_width > 0, "half width must be positive");
  const long double e = static_cast<long double>(n) - 1;
  // The tail sum_{k > K} k^{-n} lies in [(K+1)^{1-n}/(n-1), K^{1-n}/(n-1)].
  std::int64_t K = 1;
  auto tail_lo = [&](std::int64_t k) { return std::pow(static_cast<long double>(k + 1), -e) / e; };
  auto tail_hi = [&](std::int64_t k) { return std::pow(static_cast<long double>(k), -e) / e; };
  while ((tail_hi(K) - tail_lo(K)) / 2 > half_width) K *= 2;
  long double s = 0;
  for (std::int64_t k = K; k >= 1; --k) s += std::pow(static_cast<long double>(k), -static_cast<long double>(n));
  const long double rounding = 4 * std::numeric_limits<long double>::epsilon() * static_cast<long double>(K);
  Interval out;
  out.lower = static_cast<double>(s + tail_lo(K) - rounding);
  out.upper = static_cast<double>(s + tail_hi(K) + rounding);
  out.value = static_cast<double>(s + (tail_lo(K) + tail_hi(K)) / 2);
  return out;
}

}  // namespace wn
