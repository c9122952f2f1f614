#include <doctest.h>

#include "wn/binary_order.hpp"

#include <random>

using namespace wn;

namespace {
std::vector<BigInt> Y(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

ReducedTuple tuple3(std::initializer_list<std::pair<std::uint32_t, long>> entries) {
  ReducedTuple z(3);
  for (auto [h, v] : entries) z[h] = v;
  return z;
}
}  // namespace

TEST_SUITE("binary_order") {
  TEST_CASE("subset relation") {
    CHECK(subset_relation(SubsetIndex(3, 3), SubsetIndex(3, 1)) == Dominance::second_dominated);
    CHECK(subset_relation(SubsetIndex(3, 1), SubsetIndex(3, 3)) == Dominance::first_dominated);
    CHECK(subset_relation(SubsetIndex(3, 5), SubsetIndex(3, 6)) == Dominance::incomparable);
    CHECK(subset_relation(SubsetIndex(3, 7), SubsetIndex(3, 7)) == Dominance::equal);
    CHECK_THROWS_AS(SubsetIndex(3, 8), ContractViolation);
    CHECK_THROWS_AS(SubsetIndex(3, 0), ContractViolation);
  }

  TEST_CASE("named indices") {
    CHECK(SubsetIndex::singleton(4, 3).value() == 4);
    CHECK(SubsetIndex::initial(4, 3).value() == 7);
    CHECK(SubsetIndex::full(4).value() == 15);
    CHECK(SubsetIndex(4, 10).bit(2) == 1);
    CHECK(SubsetIndex(4, 10).bit(3) == 0);
    CHECK(SubsetIndex(4, 11).weight() == 3);
  }

  TEST_CASE("descending weight order") {
    const auto order = descending_weight_order(3);
    CHECK(order == std::vector<std::uint32_t>{7, 3, 5, 6, 1, 2, 4});
  }

  TEST_CASE("is_reduced") {
    CHECK(is_reduced(ReducedTuple(3)));
    CHECK(is_reduced(tuple3({{3, 2}, {5, 3}, {6, 5}})));
    CHECK_FALSE(is_reduced(tuple3({{1, 2}, {2, 2}})));
    CHECK(is_reduced(tuple3({{1, 2}, {3, 2}, {7, 4}})));
  }

  TEST_CASE("factorize") {
    CHECK(factorize(Y({1, 1, 1})) == ReducedTuple(3));
    CHECK(factorize(Y({6, 10, 15})) == tuple3({{3, 2}, {5, 3}, {6, 5}}));
    CHECK(factorize(Y({2, 2, 2})) == tuple3({{7, 2}}));
    CHECK(factorize(Y({12, 18, 4})) == tuple3({{7, 2}, {3, 3}, {5, 2}, {2, 3}}));
    CHECK_THROWS_AS(factorize(Y({0, 1, 1})), ContractViolation);
  }

  TEST_CASE("compose") {
    CHECK(compose(ReducedTuple(3)).y == Y({1, 1, 1}));
    CHECK(compose(tuple3({{7, 2}})).y == Y({2, 2, 2}));
    const auto y = compose(tuple3({{3, 2}, {5, 3}, {6, 5}}));
    CHECK(y.y == Y({6, 10, 15}));
    CHECK(y.lcm == 30);
    CHECK_THROWS_AS(compose(tuple3({{1, 2}, {2, 2}})), ContractViolation);
  }

  TEST_CASE("round trip exhaustive n = 3") {
    for (long a = 1; a <= 50; ++a)
      for (long b = 1; b <= 50; ++b)
        for (long c = 1; c <= 50; ++c) {
          const auto y = Y({a, b, c});
          const auto z = factorize(y);
          REQUIRE(is_reduced(z));
          REQUIRE(compose(z).y == y);
          REQUIRE(factorize(compose(z).y) == z);
        }
  }

  TEST_CASE("round trip randomized n = 4, 5") {
    std::mt19937_64 rng(7);
    for (unsigned n : {4u, 5u})
      for (int i = 0; i < 2000; ++i) {
        std::vector<BigInt> y(n);
        for (auto& v : y) v = static_cast<long>(1 + rng() % 50);
        const auto z = factorize(y);
        REQUIRE(is_reduced(z));
        REQUIRE(compose(z).y == y);
      }
  }

  TEST_CASE("machine integer factorize agrees with big integers") {
    const auto small = factorize(std::vector<std::int64_t>{36, 60, 90, 150});
    const auto big = factorize(Y({36, 60, 90, 150}));
    for (std::uint32_t h = 1; h <= 15; ++h) CHECK(BigInt(static_cast<long>(small[h])) == big[h]);
  }
}
