#include "wn/constants.hpp"
#include "wn/lattice_count.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

namespace wn {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr std::uint64_t kBetaStream = 0;
constexpr std::uint64_t kCompactStream = std::uint64_t{2} << 20;

}  // namespace

double beta_integrand(const std::vector<double>& u) {
  require(!u.empty(), "need at least one outer variable");
  std::vector<double> w(u.size());
  double prefix = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    require(u[i] >= 0 && u[i] <= 1, "outer variables lie in [0, 1]");
    prefix *= u[i];
    w[i] = prefix;
  }
  return slab_volume_real(w, 1.0);
}

BetaTilde beta_tilde(unsigned n, double tolerance, std::uint64_t samples, std::uint64_t seed,
                     unsigned shards) {
  require(n >= 3 && n <= 8, "beta_tilde supports 3 <= n <= 8");
  BetaTilde out;
  out.n = n;
  if (n == 3) {
    // The slab is the full square until u1 (1 + u2) reaches 1, so both levels split there.
    double inner_error = 0;
    auto inner = [&](double u1) {
      auto f = [u1](double u2) { return beta_integrand({u1, u2}); };
      const double knot = u1 > 0.5 ? 1.0 / u1 - 1.0 : 1.0;
      double e1 = 0, e2 = 0, v = 0;
      if (knot > 0) v += gauss_kronrod<double, 31>::integrate(f, 0.0, std::min(knot, 1.0), 15, tolerance / 100, &e1);
      if (knot < 1) v += gauss_kronrod<double, 31>::integrate(f, std::max(knot, 0.0), 1.0, 15, tolerance / 100, &e2);
      inner_error = std::max(inner_error, e1 + e2);
      return v;
    };
    double e1 = 0, e2 = 0;
    const double v = gauss_kronrod<double, 31>::integrate(inner, 0.0, 0.5, 15, tolerance / 100, &e1) +
                     gauss_kronrod<double, 31>::integrate(inner, 0.5, 1.0, 15, tolerance / 100, &e2);
    out.value = v;
    out.error = std::max(e1 + e2 + inner_error, 1e-15);
    out.method = "quadrature";
    return out;
  }
  const unsigned m = n - 1;
  const MCEstimate e = monte_carlo(
      samples, seed, shards,
      [m](KeyedRng& rng) {
        std::vector<double> u(m);
        for (double& x : u) x = rng.uniform();
        return beta_integrand(u);
      },
      kBetaStream);
  out.value = e.value;
  out.error = e.standard_error;
  out.method = "mc";
  out.samples = e.samples;
  out.seed = seed;
  return out;
}

double mu_infinity_scale(unsigned n) {
  double f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return n * std::ldexp(1.0, static_cast<int>(n) - 1) * f;
}

MCEstimate compact_integral(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned shards) {
  require(n >= 3 && n <= 8, "compact integral supports 3 <= n <= 8");
  // Ordered heights u_{n+1} <= ... <= u_{2n} = t come from t and ratios r_k, u_1 is integrated
  // in closed form and u_2, ..., u_{n-1} are drawn from [-1, 1]. After the change of variables
  // the weight reduces to 2^{n-2} t L where L is the admissible length of u_1 / u_{n+1}.
  const double lead = std::ldexp(1.0, static_cast<int>(n) - 2);
  return monte_carlo(
      samples, seed, shards,
      [n, lead](KeyedRng& rng) {
        const double t = 1.0 - rng.uniform();
        double height[9];
        height[n] = t;
        for (unsigned k = n - 1; k >= 1; --k) height[k] = height[k + 1] * (1.0 - rng.uniform());
        double S = 0;
        for (unsigned i = 2; i + 1 <= n; ++i) S += rng.uniform(-1.0, 1.0) / height[i];
        const double lo = std::max(-1.0 / height[1], -1.0 / t - S);
        const double hi = std::min(1.0 / height[1], 1.0 / t - S);
        return hi > lo ? lead * t * (hi - lo) : 0.0;
      },
      kCompactStream);
}

MCEstimate mu_infinity(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned shards) {
  MCEstimate e = compact_integral(n, samples, seed, shards);
  const double s = mu_infinity_scale(n);
  e.value *= s;
  e.standard_error *= s;
  return e;
}

}  // namespace wn
