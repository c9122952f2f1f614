#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wn {

enum class VarietyKind { C, B0, X0 };

const char* to_string(VarietyKind k);
VarietyKind parse_variety_kind(const std::string& s);

/// A point over F_p given by one normalized vector per block.
struct MultiProjectivePointFp {
  std::int64_t p = 2;
  unsigned n = 0;
  /// Y[h - 1] has one entry per element of h in ascending order.
  std::vector<std::vector<std::int64_t>> Y;
  /// Present for B0 and X0.
  std::vector<std::vector<std::int64_t>> Z;
  /// (x_1, ..., x_n, y_1, ..., y_n), present for X0.
  std::vector<std::int64_t> xy;
};

struct VarietyCountFp {
  VarietyKind kind = VarietyKind::C;
  unsigned n = 0;
  std::int64_t p = 2;
  std::int64_t count = 0;
  /// Every point passed the independent evaluator.
  bool verified = false;
  /// Smallest and largest number of lifts over a point of the variety below (B0 over C, X0 over B0).
  std::int64_t fiber_min = 0;
  std::int64_t fiber_max = 0;
};

bool within_budget(VarietyKind kind, unsigned n, std::int64_t p);

/// Normalized representatives of P^{k-1}(F_p): first nonzero coordinate equal to 1.
std::vector<std::vector<std::int64_t>> projective_points(unsigned k, std::int64_t p);

/// Exhaustive count; throws ResourceLimit outside the budget.
VarietyCountFp enumerate_variety(VarietyKind kind, unsigned n, std::int64_t p, bool verify = true,
                                 unsigned shards = 1);

/// Visits every point; same budget as enumerate_variety.
void for_each_point(VarietyKind kind, unsigned n, std::int64_t p,
                    const std::function<void(const MultiProjectivePointFp&)>& visit);

/// Rechecks normalization and every defining equation of the variety.
bool satisfies_equations(VarietyKind kind, const MultiProjectivePointFp& pt);

}  // namespace wn
