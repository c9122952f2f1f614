#include "wn/constants.hpp"

#include <cmath>

namespace wn {

namespace {

template <class F>
auto factor(const char* name, F&& compute) -> decltype(compute()) {
  try {
    return compute();
  } catch (const ComponentFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw ComponentFailure(name, e.what());
  }
}

double power(double base, unsigned e) {
  double r = 1;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

ConstantBreakdown assemble_constant(unsigned n, const ConstantConfig& cfg) {
  require(n == 3 || n == 4, "constant assembly supports n = 3 and n = 4");
  ConstantBreakdown b;
  b.n = n;
  b.config = cfg;

  b.V = factor("V", [&] {
    return n == 3 ? polytope_V(n, VolumeMethod::exact)
                  : polytope_V(n, VolumeMethod::mc, cfg.volume_samples, cfg.seed, cfg.shards);
  });
  b.beta_tilde = factor("beta_tilde", [&] {
    return beta_tilde(n, cfg.quadrature_tolerance, cfg.mc_samples, cfg.seed, cfg.shards);
  });
  b.euler_product = factor("euler_product", [&] { return euler_product(n, cfg.prime_limit); });
  b.f_one = factor("F(1)", [&] { return f_at_one(n, cfg.prime_limit); });
  b.zeta = factor("zeta", [&] { return zeta(n); });
  b.omega_infinity = factor("omega_infinity", [&] { return mu_infinity(n, cfg.mc_samples, cfg.seed, cfg.shards); });

  b.f_over_zeta.value = b.f_one.value.value / b.zeta.value;
  b.f_over_zeta.lower = b.f_one.value.lower / b.zeta.upper;
  b.f_over_zeta.upper = b.f_one.value.upper / b.zeta.lower;

  const unsigned pic = (1u << n) - n;
  const double V = b.V.value();
  const double V_rel = 3 * b.V.error() / V;
  b.alpha = V / power(n, pic);
  b.beta_brauer = 1;

  double factorial = 1;
  for (unsigned k = 2; k <= n; ++k) factorial *= k;
  const double bt = b.beta_tilde.value;
  const double bt_rel = (b.beta_tilde.method == "mc" ? 3 : 1) * b.beta_tilde.error / bt;

  b.c_formula = std::ldexp(1.0, static_cast<int>(n) - 1) * factorial * bt * V / power(n, pic - 1) *
                b.f_over_zeta.value;
  b.c_formula_error = bt_rel + V_rel + b.f_over_zeta.half_width() / b.f_over_zeta.value;

  b.c_peyre = b.alpha * b.beta_brauer * b.omega_infinity.value * b.euler_product.value.value;
  b.c_peyre_error = 3 * b.omega_infinity.standard_error / b.omega_infinity.value + V_rel +
                    b.euler_product.value.half_width() / b.euler_product.value.value;

  b.relative_discrepancy = b.c_formula / b.c_peyre - 1;
  b.discrepancy_bound = b.c_formula_error + b.c_peyre_error;
  return b;
}

}  // namespace wn
