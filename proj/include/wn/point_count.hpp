#pragma once

#include "wn/arith.hpp"
#include "wn/binary_order.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wn {

/// A solution (x, y) of sum_i x_i prod_{j != i} y_j = 0 with y > 0 and gcd(x, y) = 1.
struct PrimitiveSolution {
  unsigned n = 0;
  std::vector<BigInt> x;
  std::vector<BigInt> y;
  bool operator==(const PrimitiveSolution&) const = default;
};

/// Torsor coordinates; every z_h is taken positive, signs live in x'.
struct TorsorPoint {
  unsigned n = 0;
  std::vector<BigInt> xprime;
  ReducedTuple z;
  bool operator==(const TorsorPoint&) const = default;
};

enum class CountMethod { direct, moebius, torsor };

const char* to_string(CountMethod m);
CountMethod parse_count_method(const std::string& s);

struct CountReport {
  unsigned n = 0;
  BigInt B;
  CountMethod method = CountMethod::direct;
  std::int64_t count = 0;
  double seconds = 0;
  /// N / (B (log B)^{2^n - n - 1}); NaN for B < 2.
  double ratio = 0;
  unsigned shards = 1;
};

/// N(B; U_n) by the chosen pipeline; B is an integral height bound.
CountReport count_points(unsigned n, const BigInt& B, CountMethod method, unsigned shards = 1);

/// Largest admissible max-coordinate for height bound B.
std::int64_t height_side(unsigned n, const BigInt& B);

bool satisfies_equation(const std::vector<BigInt>& x, const std::vector<BigInt>& y);
BigInt height(const PrimitiveSolution& s);

/// Image of a torsor point; throws NonPrimitiveImage when the coprimality condition fails.
PrimitiveSolution torsor_push(const TorsorPoint& t);
TorsorPoint torsor_lift(const PrimitiveSolution& s);

/// gcd over the n! maximal chains H of prod_{h not in H} z_h equals 1.
bool coprimality_condition(const ReducedTuple& z);

/// Every primitive solution with y >= 1 and max coordinate <= X.
void for_each_primitive_solution(unsigned n, std::int64_t X,
                                 const std::function<void(const PrimitiveSolution&)>& visit);

/// Every admissible torsor point with max coordinate of its image <= X.
void for_each_torsor_point(unsigned n, std::int64_t X,
                           const std::function<void(const TorsorPoint&)>& visit);

/// Brute-force N(B; U_n) over all coordinates; small X only.
std::int64_t count_points_bruteforce(unsigned n, std::int64_t X);

}  // namespace wn
