#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wn {

using BigInt = mpz_class;
using Rational = mpq_class;
__extension__ using Wide = __int128;

/// Raised when a caller breaks a documented precondition.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Raised when a request exceeds the enumeration budget of an operation.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The torsor image of a point fails to be primitive.
struct NonPrimitiveImage : std::domain_error {
  using std::domain_error::domain_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Largest integer X with X^n <= B.
std::int64_t integer_root(const BigInt& B, unsigned n);

/// Inverse of a modulo m for coprime a and m >= 1; returns 0 when m == 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Moebius function on [0, limit] by a linear sieve; entry 0 is unused.
std::vector<int> mobius_table(std::int64_t limit);

/// Distinct prime factors in ascending order.
std::vector<std::int64_t> prime_factors(std::int64_t m);

/// Squarefree divisors of m together with their Moebius signs.
std::vector<std::pair<std::int64_t, int>> squarefree_divisors(std::int64_t m);

/// Primes up to limit, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

}  // namespace wn
