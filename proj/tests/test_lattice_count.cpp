#include <doctest.h>

#include "wn/lattice_count.hpp"

#include <random>

using namespace wn;

namespace {
ReducedTuple tuple(unsigned n, std::initializer_list<std::pair<std::uint32_t, long>> entries) {
  ReducedTuple z(n);
  for (auto [h, v] : entries) z[h] = v;
  return z;
}

std::vector<BigInt> B(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Dense Monte Carlo slab estimate with a fixed generator.
double slab_mc(const std::vector<double>& a, double c, int samples) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  int hit = 0;
  for (int i = 0; i < samples; ++i) {
    double s = 0;
    for (double w : a) s += w * u(rng);
    hit += std::abs(s) <= c;
  }
  double cube = 1;
  for (std::size_t i = 0; i < a.size(); ++i) cube *= 2;
  return cube * hit / samples;
}
}  // namespace

TEST_SUITE("lattice_count") {
  TEST_CASE("coefficients") {
    CHECK(lattice_coefficients(ReducedTuple(3)).d == B({1, 1, 1}));
    CHECK(lattice_coefficients(tuple(3, {{3, 2}})).d == B({1, 1, 2}));
    const auto c = lattice_coefficients(tuple(3, {{3, 2}, {5, 3}, {6, 5}}));
    CHECK(c.d == B({5, 3, 2}));
    CHECK(c.d1r[1] == 5);
    CHECK(c.d1r[2] == 1);
  }

  TEST_CASE("coefficients are lcm over y") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      std::vector<BigInt> y(4);
      for (auto& v : y) v = static_cast<long>(1 + rng() % 40);
      const auto z = factorize(y);
      const auto c = lattice_coefficients(z);
      const BigInt l = compose(z).lcm;
      for (unsigned j = 0; j < 4; ++j) REQUIRE(c.d[j] * y[j] == l);
    }
  }

  TEST_CASE("slab volume") {
    CHECK(slab_volume(B({1, 1}), 1) == 3);
    CHECK(slab_volume(B({1, 1}), 2) == 4);
    CHECK(slab_volume(B({2, 1}), 0) == 0);
    CHECK(slab_volume(B({1, 2}), 1) == 2);
    CHECK(slab_volume(B({1, 1, 1}), 1) == Rational(16, 3));
    CHECK(std::abs(slab_volume(B({1, 1}), 1).get_d() - slab_mc({1, 1}, 1, 200000)) < 0.02);
    CHECK(std::abs(slab_volume(B({1, 2}), 1).get_d() - slab_mc({1, 2}, 1, 200000)) < 0.02);
    CHECK(std::abs(slab_volume(B({1, 2, 3}), 2).get_d() - slab_mc({1, 2, 3}, 2, 200000)) < 0.04);
  }

  TEST_CASE("real slab volume matches the exact one") {
    for (auto [a, c] : {std::pair{std::vector<long>{1, 1}, 1L}, {{1, 2}, 1}, {{1, 2, 3}, 2}, {{2, 3, 5, 7}, 6}}) {
      std::vector<BigInt> ab(a.begin(), a.end());
      std::vector<double> ad(a.begin(), a.end());
      CHECK(slab_volume_real(ad, static_cast<double>(c)) == doctest::Approx(slab_volume(ab, c).get_d()).epsilon(1e-12));
    }
  }

  TEST_CASE("b of y") {
    CHECK(b_of_y(ReducedTuple(3)) == 3);
    CHECK(b_of_y(tuple(3, {{6, 100}})) == 4);
    CHECK(b_of_y(tuple(3, {{3, 2}})) == slab_volume(B({1, 2}), 1));
  }

  TEST_CASE("count_A_exact") {
    CHECK(count_A_exact(ReducedTuple(3), 1) == 7);
    CHECK(count_A_exact(tuple(3, {{3, 2}}), 1) == 5);
    CHECK(count_A_exact(tuple(3, {{3, 2}, {5, 3}}), 0) == 1);
    CHECK(count_A_exact(tuple(4, {{7, 5}}), 0) == 1);
  }

  TEST_CASE("count_congruence") {
    CHECK(count_congruence(tuple(3, {{4, 3}}), 2, 10) == 7);
    for (std::int64_t X : {0, 1, 4})
      for (unsigned r : {1u, 2u}) {
        std::int64_t expected = 1;
        for (unsigned k = r; k < 3; ++k) expected *= 2 * X + 1;
        CHECK(count_congruence(ReducedTuple(3), r, X) == expected);
      }
    const auto z = tuple(3, {{4, 2}});
    const auto lc = lattice_coefficients(z);
    const auto d = to_int64(lc.d);
    CHECK(count_congruence(z, 1, 2) == count_congruence_grid(d, lc.d1r[1].get_si(), 1, 2));
  }

  TEST_CASE("grid oracle agreement") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
      const unsigned n = 3 + static_cast<unsigned>(rng() % 2);
      ReducedTuple z(n);
      for (std::uint32_t h = 1; h <= full_index(n); ++h) {
        const BigInt v = static_cast<long>(1 + rng() % 6);
        bool fits = true;
        for (std::uint32_t l = 1; l < h; ++l) fits = fits && (comparable(h, l) || gcd_of(v, z[l]) == 1);
        if (fits) z[h] = v;
      }
      REQUIRE(is_reduced(z));
      const auto X = static_cast<std::int64_t>(rng() % 9);
      const auto lc = lattice_coefficients(z);
      const auto d = to_int64(lc.d);
      REQUIRE(count_A_exact(z, X) == count_A_grid(d, X));
      const unsigned r = 1 + static_cast<unsigned>(rng() % (n - 1));
      REQUIRE(count_congruence(z, r, X) == count_congruence_grid(d, lc.d1r[r].get_si(), r, X));
    }
  }

  TEST_CASE("linear box counts") {
    const std::vector<std::int64_t> coeff{3, -5, 7};
    const std::vector<std::int64_t> bound{4, 2, 6};
    std::int64_t brute = 0;
    for (int a = -4; a <= 4; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -6; c <= 6; ++c) brute += 3 * a - 5 * b + 7 * c == 1;
    CHECK(count_linear_box(coeff, bound, 1) == brute);
    CHECK(count_progression(2, 1, 4, 10) == 0);
    CHECK(count_progression(1, 0, 3, 10) == 7);
  }

  TEST_CASE("asymptotic main term") {
    CHECK(asymptotic_A(ReducedTuple(3), 1) == 3);
    CHECK(asymptotic_A(ReducedTuple(3), 100) == 30000);
    const auto z = tuple(3, {{6, 100}});
    CHECK(asymptotic_A(z, 10) == Rational(4));
  }
}
