#include "wn/binary_order.hpp"

#include <algorithm>

namespace wn {

SubsetIndex::SubsetIndex(unsigned n, std::uint32_t h) : n_(n), h_(h) {
  detail::check_dimension(n);
  require(h >= 1 && h <= full_index(n), "subset index out of range");
}

SubsetIndex SubsetIndex::singleton(unsigned n, unsigned j) {
  require(j >= 1 && j <= n, "coordinate out of range");
  return SubsetIndex(n, std::uint32_t{1} << (j - 1));
}

SubsetIndex SubsetIndex::initial(unsigned n, unsigned j) {
  require(j >= 1 && j <= n, "coordinate out of range");
  return SubsetIndex(n, full_index(j));
}

unsigned SubsetIndex::bit(unsigned j) const {
  require(j >= 1 && j <= n_, "coordinate out of range");
  return (h_ >> (j - 1)) & 1u;
}

Dominance subset_relation(const SubsetIndex& h, const SubsetIndex& l) {
  require(h.n() == l.n(), "subset indices of different dimensions");
  if (h.value() == l.value()) return Dominance::equal;
  if (dominated(l.value(), h.value())) return Dominance::second_dominated;
  if (dominated(h.value(), l.value())) return Dominance::first_dominated;
  return Dominance::incomparable;
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::equal: return "equal";
    case Dominance::second_dominated: return "second_dominated";
    case Dominance::first_dominated: return "first_dominated";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

std::vector<std::uint32_t> descending_weight_order(unsigned n) {
  detail::check_dimension(n);
  std::vector<std::uint32_t> order(full_index(n));
  for (std::uint32_t h = 1; h <= full_index(n); ++h) order[h - 1] = h;
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return popcount(a) > popcount(b); });
  return order;
}

}  // namespace wn
