#include <doctest.h>

#include "wn/point_count.hpp"

#include <cmath>

using namespace wn;

namespace {
std::vector<BigInt> B(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TorsorPoint torsor3(std::initializer_list<long> xprime, std::initializer_list<std::pair<std::uint32_t, long>> z) {
  TorsorPoint t{3, B(xprime), ReducedTuple(3)};
  for (auto [h, v] : z) t.z[h] = v;
  return t;
}

std::int64_t count(unsigned n, long bound, CountMethod m) { return count_points(n, BigInt(bound), m).count; }
}  // namespace

TEST_SUITE("point_count") {
  TEST_CASE("unit height") {
    for (auto m : {CountMethod::direct, CountMethod::moebius, CountMethod::torsor}) {
      CHECK(count(3, 1, m) == 28);
      CHECK(count(3, 0, m) == 0);
    }
    CHECK(count_points_bruteforce(3, 1) == 28);
  }

  TEST_CASE("methods agree with brute force") {
    for (unsigned n : {3u, 4u})
      for (std::int64_t X = 1; X <= (n == 3 ? 4 : 2); ++X) {
        BigInt bound = 1;
        for (unsigned k = 0; k < n; ++k) bound *= X;
        const auto brute = count_points_bruteforce(n, X);
        for (auto m : {CountMethod::direct, CountMethod::moebius, CountMethod::torsor})
          CHECK(count_points(n, bound, m).count == brute);
      }
  }

  TEST_CASE("frozen values") {
    CHECK(count(3, 10, CountMethod::direct) == 436);
    CHECK(count(3, 100, CountMethod::moebius) == 6148);
    CHECK(count(3, 1000, CountMethod::torsor) == 195004);
    CHECK(count(4, 16, CountMethod::torsor) == 7560);
    CHECK(count(4, 1000, CountMethod::direct) == 852104);
  }

  TEST_CASE("methods agree at moderate height") {
    for (long b : {12345L, 54321L}) {
      const auto d = count(3, b, CountMethod::direct);
      CHECK(count(3, b, CountMethod::moebius) == d);
      CHECK(count(3, b, CountMethod::torsor) == d);
    }
  }

  TEST_CASE("sharding does not change counts") {
    for (auto m : {CountMethod::direct, CountMethod::moebius, CountMethod::torsor})
      CHECK(count_points(3, 20000, m, 3).count == count_points(3, 20000, m, 1).count);
  }

  TEST_CASE("height side and ratio") {
    CHECK(height_side(3, 26) == 2);
    CHECK(height_side(3, 27) == 3);
    const auto r = count_points(3, 1000, CountMethod::direct);
    CHECK(r.ratio == doctest::Approx(195004.0 / (1000 * std::pow(std::log(1000.0), 4))));
    CHECK(std::isnan(count_points(3, 1, CountMethod::direct).ratio));
  }

  TEST_CASE("method names") {
    CHECK(parse_count_method("mobius") == CountMethod::moebius);
    CHECK(parse_count_method("torsor") == CountMethod::torsor);
    CHECK_THROWS_AS(parse_count_method("fast"), ContractViolation);
    CHECK_THROWS_AS(count_points(2, 10, CountMethod::direct), ContractViolation);
  }

  TEST_CASE("torsor push") {
    auto s = torsor_push(torsor3({1, -1, 0}, {}));
    CHECK(s.x == B({1, -1, 0}));
    CHECK(s.y == B({1, 1, 1}));
    s = torsor_push(torsor3({2, 0, -1}, {{3, 2}}));
    CHECK(s.x == B({2, 0, -1}));
    CHECK(s.y == B({2, 2, 1}));
    CHECK(satisfies_equation(s.x, s.y));
    CHECK_THROWS_AS(torsor_push(torsor3({2, -2, 0}, {{7, 2}})), NonPrimitiveImage);
  }

  TEST_CASE("torsor lift") {
    CHECK(torsor_lift({3, B({1, -1, 0}), B({1, 1, 1})}) == torsor3({1, -1, 0}, {}));
    CHECK(torsor_lift({3, B({2, 0, -1}), B({2, 2, 1})}) == torsor3({2, 0, -1}, {{3, 2}}));
    CHECK(torsor_lift({3, B({0, 0, 0}), B({1, 1, 1})}) == torsor3({0, 0, 0}, {}));
  }

  TEST_CASE("coprimality condition matches reducedness") {
    CHECK(coprimality_condition(ReducedTuple(3)));
    ReducedTuple a(3);
    a[1] = 2;
    a[2] = 2;
    CHECK_FALSE(coprimality_condition(a));
    CHECK_FALSE(is_reduced(a));
    ReducedTuple b(3);
    b[3] = 2;
    b[5] = 4;
    CHECK_FALSE(coprimality_condition(b));
    CHECK_FALSE(is_reduced(b));
    for (long v1 = 1; v1 <= 4; ++v1)
      for (long v2 = 1; v2 <= 4; ++v2)
        for (long v6 = 1; v6 <= 4; ++v6) {
          ReducedTuple z(3);
          z[1] = v1;
          z[2] = v2;
          z[6] = v6;
          CHECK(coprimality_condition(z) == is_reduced(z));
        }
  }

  TEST_CASE("torsor bijection on small boxes") {
    std::int64_t sols = 0, pts = 0;
    for_each_primitive_solution(3, 5, [&](const PrimitiveSolution& s) {
      ++sols;
      REQUIRE(torsor_push(torsor_lift(s)) == s);
    });
    for_each_torsor_point(3, 5, [&](const TorsorPoint& t) {
      ++pts;
      REQUIRE(torsor_lift(torsor_push(t)) == t);
    });
    CHECK(sols == pts);
    CHECK(sols > 0);
  }

  TEST_CASE("height") {
    CHECK(height({3, B({2, 0, -1}), B({2, 2, 1})}) == 8);
    CHECK(height({3, B({3, -1, -2}), B({1, 1, 1})}) == 27);
  }
}
