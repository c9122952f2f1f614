#include <doctest.h>

#include "wn/constants.hpp"
#include "wn/toric_fp.hpp"

#include <cmath>
#include <numbers>

using namespace wn;

TEST_SUITE("constants") {
  TEST_CASE("eulerian polynomials") {
    CHECK(eulerian_polynomial(1) == IntPolynomial{1});
    CHECK(eulerian_polynomial(3) == IntPolynomial{1, 4, 1});
    CHECK(eulerian_polynomial(4) == IntPolynomial{1, 11, 11, 1});
    CHECK(eulerian_polynomial(5) == IntPolynomial{1, 26, 66, 26, 1});
    for (unsigned n = 1; n <= 10; ++n) {
      const IntPolynomial P = eulerian_polynomial(n);
      CHECK(P.palindromic());
      BigInt fact = 1;
      for (unsigned k = 2; k <= n; ++k) fact *= k;
      CHECK(P.coefficient_sum() == fact);
      if (n >= 2) CHECK(P.coefficient(1) == (BigInt(1) << n) - n - 1);
    }
  }

  TEST_CASE("excedance polynomials") {
    CHECK(excedance_polynomial(2) == IntPolynomial{1, 1});
    CHECK(excedance_polynomial(3) == IntPolynomial{1, 4, 1});
    CHECK(excedance_polynomial(5) == IntPolynomial{1, 26, 66, 26, 1});
    for (unsigned n = 1; n <= 7; ++n) CHECK(excedance_polynomial(n) == eulerian_polynomial(n));
    CHECK_THROWS_AS(excedance_polynomial(9), ResourceLimit);
  }

  TEST_CASE("local factor polynomial") {
    const IntPolynomial g = local_factor_poly_graph(3);
    CHECK(g == IntPolynomial{1, 0, -9, 16, -9, 0, 1});
    CHECK(g == local_factor_poly(3));
    CHECK(g.coefficient_sum() == 0);
    CHECK(incomparability_edges(3).size() == 9);
    CHECK(g.coefficient(2) == -BigInt(incomparability_edges(3).size()));
    CHECK(local_factor_poly(4).coefficient(2) == -8 * 17 + 81);
    CHECK_THROWS_AS(local_factor_poly_graph(4), ResourceLimit);
  }

  TEST_CASE("local densities") {
    CHECK(local_density(3, 2) == Rational(91, 512));
    // Same factor through the F_2 point count of C_3.
    const auto c = enumerate_variety(VarietyKind::C, 3, 2);
    CHECK(local_density(3, 2) == Rational(1, 16) * Rational(7, 8) * Rational(c.count, 4));
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
      const Rational mu = local_density(4, p);
      CHECK(mu > 0);
      CHECK(mu < 1);
    }
  }

  TEST_CASE("euler products") {
    const EulerProduct a = euler_product(3, 100);
    const EulerProduct b = euler_product(3, 10000);
    CHECK(b.value.value < a.value.value);
    CHECK(b.value.lower <= b.value.value);
    CHECK(b.value.value <= b.value.upper);
    CHECK(euler_product(3, 2).value.value == doctest::Approx(91.0 / 512).epsilon(1e-12));
    // F(1) / zeta(n) is the same product.
    const EulerProduct f = f_at_one(3, 100000);
    const Interval z = zeta(3);
    const EulerProduct e = euler_product(3, 100000);
    CHECK(f.value.value / z.value == doctest::Approx(e.value.value).epsilon(1e-9));
    CHECK(z.value == doctest::Approx(1.2020569031595942).epsilon(1e-14));
  }

  TEST_CASE("polytope") {
    const PolytopeSystem s = polytope_system(3);
    CHECK(s.dimension() == 4);
    CHECK(s.contains(std::vector<double>{0, 0, 0, 0}));
    CHECK_FALSE(s.contains(std::vector<double>{1, 0, 0, 0}));
    const PolytopeVolume v = polytope_V(3, VolumeMethod::exact);
    REQUIRE(v.exact);
    CHECK(*v.exact == Rational(1, 16));
    const PolytopeVolume mc = polytope_V(3, VolumeMethod::mc, 400000, 1);
    CHECK(std::abs(mc.value() - 1.0 / 16) <= 3 * mc.error());
    CHECK_THROWS_AS(polytope_V(4, VolumeMethod::exact), ResourceLimit);
  }

  TEST_CASE("exact volume of simple bodies") {
    // t1 + t2 <= 1 in the unit square.
    CHECK(polytope_volume_exact({{Rational(1), Rational(1)}}, {Rational(1)}, 2) == Rational(1, 2));
    CHECK(polytope_volume_exact({{Rational(1), Rational(1), Rational(1)}}, {Rational(1)}, 3) == Rational(1, 6));
    CHECK(polytope_volume_exact({{Rational(1), Rational(-1)}}, {Rational(0)}, 2) == Rational(1, 2));
  }

  TEST_CASE("beta tilde") {
    CHECK(beta_integrand({1, 1}) == doctest::Approx(3));
    CHECK(beta_integrand({1e-9, 0.5}) == doctest::Approx(4));
    const BetaTilde b = beta_tilde(3);
    const double closed = std::numbers::pi * std::numbers::pi / 6 + 4 * std::numbers::ln2 - 0.5;
    CHECK(b.method == "quadrature");
    CHECK(b.value == doctest::Approx(closed).epsilon(1e-10));
    const BetaTilde b4 = beta_tilde(4, 1e-8, 200000, 3);
    CHECK(b4.method == "mc");
    CHECK(b4.value > 0);
    CHECK(b4.value <= 8);
  }

  TEST_CASE("archimedean factor") {
    CHECK(mu_infinity_scale(3) == 72);
    const MCEstimate a = compact_integral(3, 200000, 9);
    const MCEstimate b = compact_integral(3, 200000, 9);
    CHECK(a.value == b.value);
    CHECK(a.standard_error == b.standard_error);
    const MCEstimate sharded = compact_integral(3, 200000, 9, 4);
    CHECK(sharded.samples == 200000);
    CHECK(std::abs(a.value - beta_tilde(3).value) <= 4 * a.standard_error);
    const MCEstimate m = mu_infinity(3, 200000, 9);
    CHECK(m.value == doctest::Approx(72 * a.value));
  }

  TEST_CASE("assembly n = 3") {
    ConstantConfig cfg;
    cfg.prime_limit = 100000;
    cfg.mc_samples = 1000000;
    const ConstantBreakdown c = assemble_constant(3, cfg);
    CHECK(c.beta_brauer == 1);
    CHECK(c.alpha == doctest::Approx(1.0 / 16 / 243));
    CHECK(std::abs(c.relative_discrepancy) <= c.discrepancy_bound);
    CHECK(c.c_formula == doctest::Approx(0.0029767).epsilon(1e-3));
    CHECK_THROWS_AS(assemble_constant(5, cfg), ContractViolation);
  }
}
