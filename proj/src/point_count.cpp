#include "wn/point_count.hpp"

#include "wn/lattice_count.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numeric>

namespace wn {

namespace {

using i64 = std::int64_t;

void check_count_dimension(unsigned n) {
  require(n >= 3 && n <= 8, "counting supports 3 <= n <= 8");
}

// Squarefree divisors with their Moebius sign, for every g in [0, limit].
std::vector<std::vector<std::pair<i64, int>>> divisor_table(i64 limit) {
  std::vector<std::vector<std::pair<i64, int>>> t(static_cast<std::size_t>(limit + 1));
  for (i64 g = 1; g <= limit; ++g) t[g] = squarefree_divisors(g);
  return t;
}

// Runs work(shard) on each shard and sums; the total is independent of the shard plan.
i64 sharded_sum(unsigned shards, const std::function<i64(unsigned)>& work) {
  if (shards <= 1) return work(0);
  std::vector<std::future<i64>> parts;
  for (unsigned s = 0; s < shards; ++s) parts.push_back(std::async(std::launch::async, work, s));
  i64 total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

// Odometer over [1, X]^n with the first coordinate restricted to shard s.
template <class F>
void for_each_y(unsigned n, i64 X, unsigned shard, unsigned shards, F&& f) {
  std::vector<i64> y(n, 1);
  for (i64 y1 = 1 + static_cast<i64>(shard); y1 <= X; y1 += shards) {
    y[0] = y1;
    std::fill(y.begin() + 1, y.end(), 1);
    while (true) {
      f(y);
      unsigned k = 1;
      while (k < n && y[k] == X) y[k++] = 1;
      if (k == n) break;
      ++y[k];
    }
  }
}

i64 direct_count(unsigned n, i64 X, unsigned shards) {
  const auto divisors = divisor_table(X);
  return sharded_sum(shards, [&](unsigned s) {
    i64 total = 0;
    std::vector<i64> L(n);
    for_each_y(n, X, s, shards, [&](const std::vector<i64>& y) {
      const auto z = factorize(y);
      const auto d = lattice_coefficients(z).d;
      i64 g = 0;
      for (i64 v : y) g = std::gcd(g, v);
      for (const auto& [e, mu] : divisors[g]) total += mu * count_linear_cube(d, X / e);
    });
    return total;
  });
}

// Solutions with y in [1, X]^n and |x_i| <= X, primitive or not.
i64 unrestricted_count(unsigned n, i64 X, unsigned shards) {
  return sharded_sum(shards, [&](unsigned s) {
    i64 total = 0;
    std::vector<i64> d(n);
    for_each_y(n, X, s, shards, [&](const std::vector<i64>& y) {
      i64 l = 1;
      for (i64 v : y) l = std::lcm(l, v);
      for (unsigned i = 0; i < n; ++i) d[i] = l / y[i];
      total += count_linear_cube(d, X);
    });
    return total;
  });
}

i64 moebius_count(unsigned n, i64 X, unsigned shards) {
  const auto mu = mobius_table(X);
  std::map<i64, i64> cache;
  i64 total = 0;
  for (i64 k = 1; k <= X; ++k) {
    if (mu[k] == 0) continue;
    const i64 side = X / k;
    auto it = cache.find(side);
    if (it == cache.end()) it = cache.emplace(side, unrestricted_count(n, side, shards)).first;
    total += mu[k] * it->second;
  }
  return total;
}

// Depth-first walk over reduced z with every partial y_j <= X.
class TorsorWalker {
 public:
  TorsorWalker(unsigned n, i64 X) : n_(n), X_(X), order_(descending_weight_order(n)), z_(n) {
    earlier_incomparable_.resize(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k)
      for (std::size_t l = 0; l < k; ++l)
        if (!comparable(order_[k], order_[l])) earlier_incomparable_[k].push_back(order_[l]);
    partial_.assign(n, 1);
  }

  // The first level is the full index; shards split its values.
  template <class Leaf>
  void run(unsigned shard, unsigned shards, Leaf&& leaf) {
    const std::uint32_t N = full_index(n_);
    for (i64 v = 1 + static_cast<i64>(shard); v <= X_; v += shards) {
      z_[N] = v;
      std::fill(partial_.begin(), partial_.end(), v);
      descend(1, leaf);
    }
  }

  const ZTuple<i64>& z() const { return z_; }
  const std::vector<i64>& y() const { return partial_; }

 private:
  template <class Leaf>
  void descend(std::size_t k, Leaf& leaf) {
    if (k == order_.size()) {
      leaf(z_, partial_);
      return;
    }
    const std::uint32_t h = order_[k];
    i64 cap = X_;
    for (unsigned j = 0; j < n_; ++j)
      if (h >> j & 1u) cap = std::min(cap, X_ / partial_[j]);
    for (i64 v = 1; v <= cap; ++v) {
      bool ok = true;
      if (v > 1)
        for (std::uint32_t l : earlier_incomparable_[k])
          if (z_[l] > 1 && std::gcd(v, z_[l]) != 1) {
            ok = false;
            break;
          }
      if (!ok) continue;
      z_[h] = v;
      for (unsigned j = 0; j < n_; ++j)
        if (h >> j & 1u) partial_[j] *= v;
      descend(k + 1, leaf);
      for (unsigned j = 0; j < n_; ++j)
        if (h >> j & 1u) partial_[j] /= v;
    }
    z_[h] = 1;
  }

  unsigned n_;
  i64 X_;
  std::vector<std::uint32_t> order_;
  std::vector<std::vector<std::uint32_t>> earlier_incomparable_;
  ZTuple<i64> z_;
  std::vector<i64> partial_;
};

i64 torsor_count(unsigned n, i64 X, unsigned shards) {
  return sharded_sum(shards, [&](unsigned s) {
    TorsorWalker walker(n, X);
    i64 total = 0;
    std::vector<i64> D(n), L(n), Dm(n), Lm(n);
    walker.run(s, shards, [&](const ZTuple<i64>& z, const std::vector<i64>& y) {
      i64 l = 1;
      for (i64 v : z.z) l *= v;
      for (unsigned j = 0; j < n; ++j) {
        const i64 zs = z[std::uint32_t{1} << j];
        D[j] = (l / y[j]) * zs;
        L[j] = X / zs;
      }
      for (const auto& [e, mu] : squarefree_divisors(z[full_index(n)])) {
        for (unsigned j = 0; j < n; ++j) {
          const i64 m = e / std::gcd(e, z[std::uint32_t{1} << j]);
          Dm[j] = D[j] * m;
          Lm[j] = L[j] / m;
        }
        total += mu * count_linear_box(Dm, Lm, 0);
      }
    });
    return total;
  });
}

std::vector<BigInt> to_big(const std::vector<i64>& v) { return {v.begin(), v.end()}; }

BigInt gcd_all(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt g = 0;
  for (const BigInt& v : a) g = gcd_of(g, v);
  for (const BigInt& v : b) g = gcd_of(g, v);
  return g;
}

}  // namespace

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::direct: return "direct";
    case CountMethod::moebius: return "moebius";
    case CountMethod::torsor: return "torsor";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& s) {
  if (s == "direct") return CountMethod::direct;
  if (s == "moebius" || s == "mobius") return CountMethod::moebius;
  if (s == "torsor") return CountMethod::torsor;
  throw ContractViolation("unknown counting method: " + s);
}

std::int64_t height_side(unsigned n, const BigInt& B) { return integer_root(B, n); }

CountReport count_points(unsigned n, const BigInt& B, CountMethod method, unsigned shards) {
  check_count_dimension(n);
  require(shards >= 1, "shard count must be positive");
  const auto start = std::chrono::steady_clock::now();
  CountReport r;
  r.n = n;
  r.B = B;
  r.method = method;
  r.shards = shards;
  const i64 X = height_side(n, B);
  i64 raw = 0;
  if (X >= 1) {
    switch (method) {
      case CountMethod::direct: raw = direct_count(n, X, shards); break;
      case CountMethod::moebius: raw = moebius_count(n, X, shards); break;
      case CountMethod::torsor: raw = torsor_count(n, X, shards); break;
    }
  }
  r.count = raw << (n - 1);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (B >= 2) {
    const double b = B.get_d();
    r.ratio = static_cast<double>(r.count) / (b * std::pow(std::log(b), (1 << n) - n - 1));
  } else {
    r.ratio = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

bool satisfies_equation(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  require(x.size() == y.size(), "x and y lengths differ");
  BigInt sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    BigInt term = x[i];
    for (std::size_t j = 0; j < y.size(); ++j)
      if (j != i) term *= y[j];
    sum += term;
  }
  return sum == 0;
}

BigInt height(const PrimitiveSolution& s) {
  BigInt m = 0;
  for (const BigInt& v : s.x) m = std::max<BigInt>(m, abs(v));
  for (const BigInt& v : s.y) m = std::max<BigInt>(m, abs(v));
  BigInt h;
  mpz_pow_ui(h.get_mpz_t(), m.get_mpz_t(), s.n);
  return h;
}

PrimitiveSolution torsor_push(const TorsorPoint& t) {
  const unsigned n = t.n;
  require(t.z.n == n && t.xprime.size() == n, "torsor point dimensions disagree");
  for (const BigInt& v : t.z.z) require(v >= 1, "torsor z entries must be positive");
  require(is_reduced(t.z), "torsor z must be reduced");
  PrimitiveSolution s;
  s.n = n;
  s.y = compose_unchecked(t.z);
  s.x.resize(n);
  for (unsigned j = 0; j < n; ++j) s.x[j] = t.z[std::uint32_t{1} << j] * t.xprime[j];
  require(satisfies_equation(s.x, s.y), "torsor equation fails");
  BigInt g = t.z[full_index(n)];
  for (const BigInt& v : s.x) g = gcd_of(g, v);
  if (g != 1) throw NonPrimitiveImage("image of torsor point is not primitive");
  return s;
}

TorsorPoint torsor_lift(const PrimitiveSolution& s) {
  const unsigned n = s.n;
  require(s.x.size() == n && s.y.size() == n, "solution dimensions disagree");
  for (const BigInt& v : s.y) require(v >= 1, "y entries must be positive");
  require(satisfies_equation(s.x, s.y), "not a solution");
  require(gcd_all(s.x, s.y) == 1, "solution is not primitive");
  TorsorPoint t;
  t.n = n;
  t.z = factorize(s.y);
  t.xprime.resize(n);
  for (unsigned j = 0; j < n; ++j) {
    const BigInt& zs = t.z[std::uint32_t{1} << j];
    require(s.x[j] % zs == 0, "singleton factor does not divide x");
    t.xprime[j] = s.x[j] / zs;
  }
  return t;
}

bool coprimality_condition(const ReducedTuple& z) {
  const unsigned n = z.n;
  require(n >= 2 && n <= 8, "coprimality_condition supports 2 <= n <= 8");
  require(z.z.size() == full_index(n), "tuple length must be 2^n - 1");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  BigInt g = 0;
  std::vector<bool> on_chain(full_index(n) + 1);
  do {
    std::fill(on_chain.begin(), on_chain.end(), false);
    std::uint32_t h = 0;
    for (unsigned k = 0; k < n; ++k) {
      h |= std::uint32_t{1} << perm[k];
      on_chain[h] = true;
    }
    BigInt p = 1;
    for (std::uint32_t l = 1; l <= full_index(n); ++l)
      if (!on_chain[l]) p *= z[l];
    g = gcd_of(g, p);
    if (g == 1) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g == 1;
}

void for_each_primitive_solution(unsigned n, std::int64_t X,
                                 const std::function<void(const PrimitiveSolution&)>& visit) {
  check_count_dimension(n);
  if (X < 1) return;
  PrimitiveSolution s;
  s.n = n;
  s.x.assign(n, 0);
  for_each_y(n, X, 0, 1, [&](const std::vector<i64>& y) {
    i64 l = 1, gy = 0;
    for (i64 v : y) {
      l = std::lcm(l, v);
      gy = std::gcd(gy, v);
    }
    std::vector<i64> d(n), x(n, -X);
    for (unsigned i = 0; i < n; ++i) d[i] = l / y[i];
    s.y = to_big(y);
    // Walk x in [-X, X]^{n-1} and solve for the last coordinate.
    while (true) {
      i64 acc = 0;
      for (unsigned i = 0; i + 1 < n; ++i) acc += d[i] * x[i];
      if (acc % d[n - 1] == 0) {
        const i64 last = -acc / d[n - 1];
        if (last >= -X && last <= X) {
          i64 g = gy;
          for (unsigned i = 0; i + 1 < n; ++i) g = std::gcd(g, x[i]);
          g = std::gcd(g, last);
          if (g == 1) {
            for (unsigned i = 0; i + 1 < n; ++i) s.x[i] = x[i];
            s.x[n - 1] = last;
            visit(s);
          }
        }
      }
      unsigned k = 0;
      while (k + 1 < n && x[k] == X) x[k++] = -X;
      if (k + 1 == n) break;
      ++x[k];
    }
  });
}

void for_each_torsor_point(unsigned n, std::int64_t X,
                           const std::function<void(const TorsorPoint&)>& visit) {
  check_count_dimension(n);
  if (X < 1) return;
  TorsorWalker walker(n, X);
  TorsorPoint t;
  t.n = n;
  t.xprime.assign(n, 0);
  walker.run(0, 1, [&](const ZTuple<i64>& z, const std::vector<i64>& y) {
    i64 l = 1;
    for (i64 v : z.z) l *= v;
    std::vector<i64> D(n), L(n), xp(n);
    for (unsigned j = 0; j < n; ++j) {
      const i64 zs = z[std::uint32_t{1} << j];
      D[j] = (l / y[j]) * zs;
      L[j] = X / zs;
      xp[j] = -L[j];
    }
    const i64 zN = z[full_index(n)];
    t.z = ReducedTuple(n, to_big(z.z));
    while (true) {
      i64 acc = 0;
      for (unsigned j = 0; j < n; ++j) acc += D[j] * xp[j];
      if (acc == 0) {
        i64 g = zN;
        for (unsigned j = 0; j < n; ++j) g = std::gcd(g, xp[j] * z[std::uint32_t{1} << j]);
        if (g == 1) {
          for (unsigned j = 0; j < n; ++j) t.xprime[j] = xp[j];
          visit(t);
        }
      }
      unsigned k = 0;
      while (k < n && xp[k] == L[k]) {
        xp[k] = -L[k];
        ++k;
      }
      if (k == n) break;
      ++xp[k];
    }
  });
}

std::int64_t count_points_bruteforce(unsigned n, std::int64_t X) {
  check_count_dimension(n);
  require(X <= 4, "brute-force counting limited to X <= 4");
  if (X < 1) return 0;
  const unsigned m = 2 * n;
  const i64 side = 2 * X + 1;
  i64 total_cells = 1;
  for (unsigned k = 0; k < m; ++k) total_cells *= side;
  std::vector<i64> v(m);
  i64 count = 0;
  for (i64 cell = 0; cell < total_cells; ++cell) {
    i64 c = cell;
    bool zero_y = false;
    for (unsigned k = 0; k < m; ++k) {
      v[k] = c % side - X;
      c /= side;
      if (k >= n && v[k] == 0) zero_y = true;
    }
    if (zero_y) continue;
    i64 sum = 0, g = 0;
    for (unsigned i = 0; i < n; ++i) {
      i64 term = v[i];
      for (unsigned j = 0; j < n; ++j)
        if (j != i) term *= v[n + j];
      sum += term;
    }
    if (sum != 0) continue;
    for (i64 w : v) g = std::gcd(g, w);
    if (g == 1) ++count;
  }
  return count / 2;
}

}  // namespace wn
