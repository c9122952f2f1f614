#pragma once

#include "wn/arith.hpp"
#include "wn/monte_carlo.hpp"
#include "wn/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wn {

/// A factor of the leading constant could not be computed.
struct ComponentFailure : std::runtime_error {
  ComponentFailure(std::string factor, const std::string& why)
      : std::runtime_error(factor + ": " + why), factor(std::move(factor)) {}
  std::string factor;
};

/// A real value with a rigorous or estimated enclosure.
struct Interval {
  double value = 0;
  double lower = 0;
  double upper = 0;
  double half_width() const { return (upper - lower) / 2; }
};

// Polynomials.

IntPolynomial eulerian_polynomial(unsigned n);
/// Excedance generating polynomial by enumerating S_n; n <= 8.
IntPolynomial excedance_polynomial(unsigned n);
/// (1 - X)^{2^n - n - 1} P_n(X).
IntPolynomial local_factor_poly(unsigned n);
/// Alternating edge-subset sum over the incomparability graph; n = 3 only.
IntPolynomial local_factor_poly_graph(unsigned n);
/// Incomparable pairs among [1, 2^n - 2].
std::vector<std::pair<std::uint32_t, std::uint32_t>> incomparability_edges(unsigned n);

// Euler products.

/// mu_p = (1 - 1/p)^{2^n - n - 1} P_n(1/p) (1 - p^{-n}).
Rational local_density(unsigned n, std::int64_t p);

struct EulerProduct {
  unsigned n = 0;
  std::int64_t prime_limit = 0;
  std::size_t primes = 0;
  Interval value;
  /// Bound on |log| of the omitted tail.
  double log_tail_bound = 0;
};

EulerProduct euler_product(unsigned n, std::int64_t prime_limit);

/// F(1) by summing the local series of (k+1)^n - k^n directly.
EulerProduct f_at_one(unsigned n, std::int64_t prime_limit);

Interval zeta(unsigned n, double half_width = 1e-12);

// Polytope.

/// Constraints sum_k a_k t_k <= b over [0, 1]^dim, variables labelled by subset index.
struct PolytopeSystem {
  unsigned n = 0;
  std::vector<std::uint32_t> variables;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  std::size_t dimension() const { return variables.size(); }
  bool contains(const std::vector<double>& t) const;
  bool contains(const std::vector<Rational>& t) const;
};

PolytopeSystem polytope_system(unsigned n);

/// Exact volume of {A t <= b} intersected with the unit cube.
Rational polytope_volume_exact(const std::vector<std::vector<Rational>>& rows,
                               const std::vector<Rational>& rhs, std::size_t dim);

enum class VolumeMethod { exact, mc };

struct PolytopeVolume {
  VolumeMethod method = VolumeMethod::exact;
  std::optional<Rational> exact;
  MCEstimate estimate;
  double value() const { return exact ? exact->get_d() : estimate.value; }
  double error() const { return exact ? 0.0 : estimate.standard_error; }
};

PolytopeVolume polytope_V(unsigned n, VolumeMethod method, std::uint64_t samples = 1000000,
                          std::uint64_t seed = 0, unsigned shards = 1);

// Archimedean factors.

/// Inner slab volume for outer variables u in [0,1]^{n-1}.
double beta_integrand(const std::vector<double>& u);

struct BetaTilde {
  unsigned n = 0;
  double value = 0;
  double error = 0;
  std::string method;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

BetaTilde beta_tilde(unsigned n, double tolerance = 1e-8, std::uint64_t samples = 10000000,
                     std::uint64_t seed = 0, unsigned shards = 1);

/// n 2^{n-1} n!.
double mu_infinity_scale(unsigned n);

/// Monte Carlo value of the ordered compact integral, before scaling.
MCEstimate compact_integral(unsigned n, std::uint64_t samples, std::uint64_t seed,
                            unsigned shards = 1);

/// mu_infinity = scale times the compact integral.
MCEstimate mu_infinity(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned shards = 1);

// Assembly.

struct ConstantConfig {
  std::int64_t prime_limit = 1000000;
  std::uint64_t mc_samples = 10000000;
  std::uint64_t volume_samples = 2000000;
  std::uint64_t seed = 0;
  unsigned shards = 1;
  double quadrature_tolerance = 1e-8;
};

struct ConstantBreakdown {
  unsigned n = 0;
  ConstantConfig config;
  PolytopeVolume V;
  BetaTilde beta_tilde;
  EulerProduct euler_product;    ///< product of mu_p
  EulerProduct f_one;            ///< F(1)
  Interval zeta;
  Interval f_over_zeta;          ///< F(1) / zeta(n)
  double alpha = 0;
  double beta_brauer = 1;
  MCEstimate omega_infinity;     ///< mu_infinity
  double c_formula = 0;
  double c_formula_error = 0;    ///< relative
  double c_peyre = 0;
  double c_peyre_error = 0;      ///< relative
  double relative_discrepancy = 0;
  double discrepancy_bound = 0;
};

ConstantBreakdown assemble_constant(unsigned n, const ConstantConfig& config = {});

}  // namespace wn
