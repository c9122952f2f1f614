#include <doctest.h>

#include "wn/constants.hpp"
#include "wn/toric_fp.hpp"

using namespace wn;

TEST_SUITE("toric_fp") {
  TEST_CASE("projective points") {
    CHECK(projective_points(1, 5).size() == 1);
    CHECK(projective_points(2, 3).size() == 4);
    CHECK(projective_points(3, 2).size() == 7);
    for (const auto& v : projective_points(3, 3)) {
      std::size_t lead = 0;
      while (v[lead] == 0) ++lead;
      CHECK(v[lead] == 1);
    }
  }

  TEST_CASE("counts of C") {
    CHECK(enumerate_variety(VarietyKind::C, 3, 2).count == 13);
    CHECK(enumerate_variety(VarietyKind::C, 3, 3).count == 22);
    CHECK(enumerate_variety(VarietyKind::C, 3, 5).count == 46);
    CHECK(enumerate_variety(VarietyKind::C, 4, 2).count == 75);
  }

  TEST_CASE("counts follow the Eulerian polynomial") {
    for (unsigned n = 2; n <= 4; ++n)
      for (std::int64_t p : {2, 3, 5, 7}) {
        const auto r = enumerate_variety(VarietyKind::C, n, p);
        CHECK(r.verified);
        CHECK(BigInt(static_cast<long>(r.count)) == eulerian_polynomial(n)(Rational(p)));
      }
  }

  TEST_CASE("B0 is isomorphic to C") {
    for (std::int64_t p : {2, 3, 5}) {
      const auto b = enumerate_variety(VarietyKind::B0, 3, p);
      CHECK(b.count == enumerate_variety(VarietyKind::C, 3, p).count);
      CHECK(b.fiber_min == 1);
      CHECK(b.fiber_max == 1);
      CHECK(b.verified);
    }
  }

  TEST_CASE("X0 is a projective bundle") {
    const auto x = enumerate_variety(VarietyKind::X0, 3, 2);
    CHECK(x.count == 91);
    CHECK(x.fiber_min == 7);
    CHECK(x.fiber_max == 7);
    const auto y = enumerate_variety(VarietyKind::X0, 3, 3);
    CHECK(y.count == 13 * 22);
    CHECK(y.verified);
  }

  TEST_CASE("sharding") {
    for (unsigned shards : {2u, 3u, 5u}) {
      CHECK(enumerate_variety(VarietyKind::C, 4, 5, true, shards).count == 456);
      CHECK(enumerate_variety(VarietyKind::X0, 3, 2, true, shards).count == 91);
    }
  }

  TEST_CASE("budget and arguments") {
    CHECK_THROWS_AS(enumerate_variety(VarietyKind::C, 5, 2), ResourceLimit);
    CHECK_THROWS_AS(enumerate_variety(VarietyKind::C, 3, 11), ResourceLimit);
    CHECK_THROWS_AS(enumerate_variety(VarietyKind::B0, 4, 2), ResourceLimit);
    CHECK_THROWS_AS(enumerate_variety(VarietyKind::X0, 3, 5), ResourceLimit);
    CHECK_THROWS_AS(enumerate_variety(VarietyKind::C, 3, 4), ContractViolation);
    CHECK(parse_variety_kind("X0") == VarietyKind::X0);
    CHECK_THROWS_AS(parse_variety_kind("Y"), ContractViolation);
  }

  TEST_CASE("evaluator rejects broken points") {
    MultiProjectivePointFp good;
    for_each_point(VarietyKind::X0, 3, 3, [&](const MultiProjectivePointFp& pt) {
      if (good.Y.empty()) good = pt;
    });
    REQUIRE(satisfies_equations(VarietyKind::X0, good));
    auto bad = good;
    bad.Y[6] = {2, 0, 0};
    CHECK_FALSE(satisfies_equations(VarietyKind::X0, bad));
    bad = good;
    bad.Y[2] = {1};
    CHECK_FALSE(satisfies_equations(VarietyKind::C, bad));
    // Over a fixed base point only the fiber survives.
    std::int64_t accepted = 0, total = 0;
    for (const auto& xy : projective_points(6, 3)) {
      bad = good;
      bad.xy = xy;
      accepted += satisfies_equations(VarietyKind::X0, bad);
      ++total;
    }
    CHECK(accepted == 13);
    CHECK(total == 364);
  }
}
