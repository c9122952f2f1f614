#include "wn/arith.hpp"

namespace wn {

std::int64_t integer_root(const BigInt& B, unsigned n) {
  require(n >= 1, "root degree must be positive");
  if (B < 1) return 0;
  BigInt r;
  mpz_root(r.get_mpz_t(), B.get_mpz_t(), n);
  if (!r.fits_slong_p()) throw ResourceLimit("height bound too large");
  return r.get_si();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = ((a % m) + m) % m;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  require(r0 == 1, "mod_inverse: arguments not coprime");
  return ((s0 % m) + m) % m;
}

std::vector<int> mobius_table(std::int64_t limit) {
  std::vector<int> mu(static_cast<std::size_t>(limit + 1), 1);
  if (limit >= 0) mu[0] = 0;
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::int64_t p : primes) {
      if (i * p > limit) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<std::pair<std::int64_t, int>> squarefree_divisors(std::int64_t m) {
  std::vector<std::pair<std::int64_t, int>> out{{1, 1}};
  for (std::int64_t p : prime_factors(m)) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(out[i].first * p, -out[i].second);
  }
  return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(limit + 1), true);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

}  // namespace wn
