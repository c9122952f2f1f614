#include "wn/binary_order.hpp"
#include "wn/constants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace wn {

IntPolynomial eulerian_polynomial(unsigned n) {
  require(n >= 1, "n must be positive");
  IntPolynomial P{1};
  const IntPolynomial X_one_minus_X{0, 1, -1};
  for (unsigned k = 1; k < n; ++k)
    P = IntPolynomial{1, static_cast<long>(k)} * P + X_one_minus_X * P.derivative();
  return P;
}

IntPolynomial excedance_polynomial(unsigned n) {
  require(n >= 1, "n must be positive");
  if (n > 8) throw ResourceLimit("excedance enumeration limited to n <= 8");
  std::vector<unsigned> w(n);
  std::iota(w.begin(), w.end(), 0u);
  std::vector<BigInt> counts(n, BigInt(0));
  do {
    unsigned e = 0;
    for (unsigned i = 0; i < n; ++i) e += w[i] > i;
    counts[e] += 1;
  } while (std::next_permutation(w.begin(), w.end()));
  return IntPolynomial(std::move(counts));
}

IntPolynomial local_factor_poly(unsigned n) {
  require(n >= 1 && n <= 20, "n out of range");
  return IntPolynomial{1, -1}.pow((1u << n) - n - 1) * eulerian_polynomial(n);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> incomparability_edges(unsigned n) {
  detail::check_dimension(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  const std::uint32_t top = full_index(n) - 1;
  for (std::uint32_t a = 1; a <= top; ++a)
    for (std::uint32_t b = a + 1; b <= top; ++b)
      if (!comparable(a, b)) edges.emplace_back(a, b);
  return edges;
}

IntPolynomial local_factor_poly_graph(unsigned n) {
  require(n >= 2, "n must be at least 2");
  if (n > 3) throw ResourceLimit("edge-subset enumeration limited to n = 3");
  const auto edges = incomparability_edges(n);
  const std::size_t vertices = full_index(n) - 1;
  std::vector<BigInt> b(vertices + 1, BigInt(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::uint64_t covered = 0;
    unsigned size = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!(mask >> e & 1u)) continue;
      ++size;
      covered |= std::uint64_t{1} << edges[e].first;
      covered |= std::uint64_t{1} << edges[e].second;
    }
    const auto k = static_cast<std::size_t>(std::popcount(covered));
    b[k] += size % 2 == 0 ? 1 : -1;
  }
  return IntPolynomial(std::move(b));
}

}  // namespace wn
