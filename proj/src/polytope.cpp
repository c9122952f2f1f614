#include "wn/binary_order.hpp"
#include "wn/constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace wn {

namespace {

using Monomial = std::vector<unsigned>;
using Poly = std::map<Monomial, Rational>;

// a . x <= b over the first k variables.
struct Row {
  std::vector<Rational> a;
  Rational b;
  bool operator<(const Row& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
  bool operator==(const Row& o) const { return a == o.a && b == o.b; }
};

// value = a . x + c over the first k variables.
struct Affine {
  std::vector<Rational> a;
  Rational c;
  bool operator==(const Affine& o) const { return a == o.a && c == o.c; }
};

// Scales the row so its leading nonzero coefficient is +-1; returns false for an all-zero row.
bool normalize(Row& r) {
  auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational& v) { return v != 0; });
  if (it == r.a.end()) return false;
  Rational s = abs(*it);
  for (Rational& v : r.a) v /= s;
  r.b /= s;
  return true;
}

void add_term(Poly& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly multiply(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Monomial m(mx.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mx[i] + my[i];
      add_term(out, m, cx * cy);
    }
  return out;
}

Poly affine_poly(const Affine& f, std::size_t dim) {
  Poly p;
  add_term(p, Monomial(dim, 0), f.c);
  for (std::size_t i = 0; i < f.a.size(); ++i) {
    Monomial m(dim, 0);
    m[i] = 1;
    add_term(p, m, f.a[i]);
  }
  return p;
}

// Replaces variable v by the affine form f.
Poly substitute(const Poly& p, std::size_t v, const Affine& f, std::size_t dim) {
  const Poly base = affine_poly(f, dim);
  std::vector<Poly> powers{Poly{{Monomial(dim, 0), Rational(1)}}};
  Poly out;
  for (const auto& [m, c] : p) {
    while (powers.size() <= m[v]) powers.push_back(multiply(powers.back(), base));
    Monomial rest = m;
    rest[v] = 0;
    for (const auto& [pm, pc] : powers[m[v]]) {
      Monomial q(dim);
      for (std::size_t i = 0; i < dim; ++i) q[i] = rest[i] + pm[i];
      add_term(out, q, c * pc);
    }
  }
  return out;
}

Poly antiderivative(const Poly& p, std::size_t v) {
  Poly out;
  for (const auto& [m, c] : p) {
    Monomial q = m;
    ++q[v];
    add_term(out, q, c / Rational(q[v]));
  }
  return out;
}

class Integrator {
 public:
  explicit Integrator(std::size_t dim) : dim_(dim) {}

  // Integral of f over {x in R^k : rows}; f only involves the first k variables.
  Rational integrate(const Poly& f, std::vector<Row> rows, std::size_t k) {
    // Drop constant rows, failing fast on violated ones, and deduplicate the rest.
    std::vector<Row> live;
    for (Row& r : rows) {
      if (!normalize(r)) {
        if (r.b < 0) return 0;
        continue;
      }
      live.push_back(std::move(r));
    }
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    if (f.empty()) return 0;
    if (k == 0) {
      auto it = f.find(Monomial(dim_, 0));
      return it == f.end() ? Rational(0) : it->second;
    }

    const std::size_t v = k - 1;
    std::vector<Affine> lower, upper;
    std::vector<Row> rest;
    for (const Row& r : live) {
      const Rational& av = r.a[v];
      if (av == 0) {
        Row t{std::vector<Rational>(r.a.begin(), r.a.begin() + v), r.b};
        rest.push_back(std::move(t));
        continue;
      }
      Affine bound{std::vector<Rational>(v), r.b / av};
      for (std::size_t i = 0; i < v; ++i) bound.a[i] = -r.a[i] / av;
      auto& side = av > 0 ? upper : lower;
      if (std::find(side.begin(), side.end(), bound) == side.end()) side.push_back(std::move(bound));
    }
    require(!lower.empty() && !upper.empty(), "polytope is unbounded");

    const Poly F = antiderivative(f, v);
    Rational total = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      for (std::size_t j = 0; j < upper.size(); ++j) {
        std::vector<Row> region = rest;
        for (std::size_t i2 = 0; i2 < lower.size(); ++i2)
          if (i2 != i) region.push_back(difference(lower[i2], lower[i]));
        for (std::size_t j2 = 0; j2 < upper.size(); ++j2)
          if (j2 != j) region.push_back(difference(upper[j], upper[j2]));
        region.push_back(difference(lower[i], upper[j]));
        Poly g = substitute(F, v, upper[j], dim_);
        for (const auto& [m, c] : substitute(F, v, lower[i], dim_)) add_term(g, m, -c);
        total += integrate(g, std::move(region), v);
      }
    }
    return total;
  }

 private:
  // Row stating x - y <= 0.
  static Row difference(const Affine& x, const Affine& y) {
    Row r{std::vector<Rational>(x.a.size()), y.c - x.c};
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }

  std::size_t dim_;
};

// Adds coefficient c to every variable h satisfying keep(h).
template <class Pred>
void accumulate(std::vector<Rational>& row, const std::vector<std::uint32_t>& vars, Rational c, Pred keep) {
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (keep(vars[k])) row[k] += c;
}

bool bit(std::uint32_t h, unsigned j) { return (h >> (j - 1)) & 1u; }

}  // namespace

bool PolytopeSystem::contains(const std::vector<double>& t) const {
  require(t.size() == dimension(), "point dimension mismatch");
  for (double v : t)
    if (v < 0 || v > 1) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    double s = 0;
    for (std::size_t k = 0; k < t.size(); ++k) s += rows[r][k].get_d() * t[k];
    if (s > rhs[r].get_d()) return false;
  }
  return true;
}

bool PolytopeSystem::contains(const std::vector<Rational>& t) const {
  require(t.size() == dimension(), "point dimension mismatch");
  for (const Rational& v : t)
    if (v < 0 || v > 1) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational s = 0;
    for (std::size_t k = 0; k < t.size(); ++k) s += rows[r][k] * t[k];
    if (s > rhs[r]) return false;
  }
  return true;
}

PolytopeSystem polytope_system(unsigned n) {
  require(n >= 3 && n <= 10, "polytope defined for 3 <= n <= 10");
  PolytopeSystem sys;
  sys.n = n;
  const std::uint32_t N = full_index(n);
  auto new_row = [&] { return std::vector<Rational>(sys.variables.size(), Rational(0)); };

  if (n == 3) {
    sys.variables = {2, 4, 5, 6};
    sys.rows = {{1, -1, -1, 0}, {0, 1, 1, 1}, {-1, 0, 1, -1}};
    sys.rhs = {0, 1, 0};
    return sys;
  }

  std::vector<std::uint32_t> excluded{5, N};
  for (unsigned l = 2; l <= n - 1; ++l) excluded.push_back(full_index(l));
  for (std::uint32_t h = 1; h <= N; ++h)
    if (std::find(excluded.begin(), excluded.end(), h) == excluded.end()) sys.variables.push_back(h);
  const auto& vars = sys.variables;

  for (unsigned j = 4; j + 1 <= n; ++j) {
    auto row = new_row();
    const std::uint32_t hj = full_index(j);
    accumulate(row, vars, 1, [&](std::uint32_t h) { return bit(h, j) && !bit(h, j + 1) && h != hj; });
    accumulate(row, vars, -1, [&](std::uint32_t h) { return !bit(h, j) && bit(h, j + 1); });
    sys.rows.push_back(std::move(row));
    sys.rhs.emplace_back(0);
  }
  {
    auto row = new_row();
    accumulate(row, vars, 1, [&](std::uint32_t h) { return bit(h, n) && h != N; });
    sys.rows.push_back(std::move(row));
    sys.rhs.emplace_back(1);
  }
  {
    auto row = new_row();
    accumulate(row, vars, 1, [](std::uint32_t h) { return bit(h, 1) && !bit(h, 3) && h != 3; });
    accumulate(row, vars, -1, [](std::uint32_t h) { return !bit(h, 1) && bit(h, 3); });
    sys.rows.push_back(std::move(row));
    sys.rhs.emplace_back(0);
  }
  {
    auto row = new_row();
    accumulate(row, vars, 1, [](std::uint32_t h) { return bit(h, 1) && !bit(h, 2) && h != 5; });
    accumulate(row, vars, -1, [](std::uint32_t h) { return !bit(h, 1) && bit(h, 2); });
    sys.rows.push_back(std::move(row));
    sys.rhs.emplace_back(0);
  }
  {
    auto row = new_row();
    accumulate(row, vars, 1, [](std::uint32_t h) { return !bit(h, 1) && bit(h, 2); });
    accumulate(row, vars, 1, [](std::uint32_t h) { return !bit(h, 4) && bit(h, 3) && h != 5 && h != 7; });
    accumulate(row, vars, -1, [](std::uint32_t h) { return bit(h, 1) && !bit(h, 2) && h != 5; });
    accumulate(row, vars, -1, [](std::uint32_t h) { return bit(h, 4) && !bit(h, 3); });
    sys.rows.push_back(std::move(row));
    sys.rhs.emplace_back(0);
  }
  return sys;
}

Rational polytope_volume_exact(const std::vector<std::vector<Rational>>& rows,
                               const std::vector<Rational>& rhs, std::size_t dim) {
  require(rows.size() == rhs.size(), "row and bound counts differ");
  require(dim >= 1 && dim <= 8, "exact volume limited to dimension <= 8");
  std::vector<Row> all;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == dim, "row length must equal the dimension");
    all.push_back(Row{rows[r], rhs[r]});
  }
  for (std::size_t k = 0; k < dim; ++k) {
    Row lo{std::vector<Rational>(dim, Rational(0)), 0};
    lo.a[k] = -1;
    Row hi{std::vector<Rational>(dim, Rational(0)), 1};
    hi.a[k] = 1;
    all.push_back(std::move(lo));
    all.push_back(std::move(hi));
  }
  Poly one{{Monomial(dim, 0), Rational(1)}};
  Rational v = Integrator(dim).integrate(one, std::move(all), dim);
  v.canonicalize();
  return v;
}

PolytopeVolume polytope_V(unsigned n, VolumeMethod method, std::uint64_t samples, std::uint64_t seed,
                          unsigned shards) {
  const PolytopeSystem sys = polytope_system(n);
  PolytopeVolume out;
  out.method = method;
  if (method == VolumeMethod::exact) {
    if (n != 3) throw ResourceLimit("exact polytope volume is limited to n = 3");
    out.exact = polytope_volume_exact(sys.rows, sys.rhs, sys.dimension());
    return out;
  }
  if (n > 4) throw ResourceLimit("Monte Carlo polytope volume is limited to n <= 4");
  const std::size_t d = sys.dimension();
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    rows.emplace_back();
    for (const Rational& q : sys.rows[r]) rows.back().push_back(q.get_d());
    rhs.push_back(sys.rhs[r].get_d());
  }
  // For n >= 4 the variables carrying the last coordinate are confined to a simplex of
  // volume 1/k!; they are drawn uniformly from it and the hit rate is rescaled.
  std::vector<std::size_t> simplex;
  if (n >= 4)
    for (std::size_t k = 0; k < d; ++k)
      if (bit(sys.variables[k], n)) simplex.push_back(k);
  double scale = 1;
  for (std::size_t k = 2; k <= simplex.size(); ++k) scale /= static_cast<double>(k);
  out.estimate = monte_carlo(
      samples, seed, shards,
      [&](KeyedRng& rng) {
        double t[32];
        for (std::size_t k = 0; k < d; ++k) t[k] = rng.uniform();
        if (!simplex.empty()) {
          double e[33], total = 0;
          for (std::size_t k = 0; k <= simplex.size(); ++k) total += e[k] = -std::log1p(-rng.uniform());
          for (std::size_t k = 0; k < simplex.size(); ++k) t[simplex[k]] = e[k] / total;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
          double s = 0;
          for (std::size_t k = 0; k < d; ++k) s += rows[r][k] * t[k];
          if (s > rhs[r]) return 0.0;
        }
        return scale;
      },
      std::uint64_t{1} << 20);
  return out;
}

}  // namespace wn
