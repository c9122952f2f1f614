#include "wn/toric_fp.hpp"

#include "wn/arith.hpp"
#include "wn/binary_order.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <limits>

namespace wn {

namespace {

using i64 = std::int64_t;
using Vec = std::vector<i64>;

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<unsigned> elements(std::uint32_t h) {
  std::vector<unsigned> e;
  for (unsigned j = 0; j < 32; ++j)
    if (h >> j & 1u) e.push_back(j);
  return e;
}

// Position pairs (a, b) inside I and (c, d) inside J for every pair k < l of elements of J.
struct PairMap {
  std::uint32_t J;
  std::vector<std::array<unsigned, 4>> pos;
};

std::vector<PairMap> proper_sub_blocks(std::uint32_t I) {
  std::vector<PairMap> out;
  const auto eI = elements(I);
  for (std::uint32_t J = 1; J < I; ++J) {
    if (!dominated(J, I) || popcount(J) < 2) continue;
    const auto eJ = elements(J);
    PairMap m{J, {}};
    for (unsigned c = 0; c < eJ.size(); ++c)
      for (unsigned d = c + 1; d < eJ.size(); ++d) {
        const auto a = static_cast<unsigned>(std::find(eI.begin(), eI.end(), eJ[c]) - eI.begin());
        const auto b = static_cast<unsigned>(std::find(eI.begin(), eI.end(), eJ[d]) - eI.begin());
        m.pos.push_back({a, b, c, d});
      }
    out.push_back(std::move(m));
  }
  return out;
}

// Block compatibility V^I_k V^J_l = V^I_l V^J_k for all recorded pairs.
bool compatible(const Vec& VI, const Vec& VJ, const PairMap& m, i64 p) {
  for (const auto& [a, b, c, d] : m.pos)
    if ((VI[a] * VJ[d] - VI[b] * VJ[c]) % p != 0) return false;
  return true;
}

// Y_i Z_i takes the same value for every i in the block.
bool products_equal(const Vec& Y, const Vec& Z, i64 p) {
  const i64 first = Y[0] * Z[0] % p;
  for (std::size_t i = 1; i < Y.size(); ++i)
    if (Y[i] * Z[i] % p != first) return false;
  return true;
}

class Enumerator {
 public:
  Enumerator(VarietyKind kind, unsigned n, i64 p) : kind_(kind), n_(n), p_(p) {
    const std::uint32_t N = full_index(n);
    points_.resize(n + 1);
    for (unsigned k = 1; k <= n; ++k) points_[k] = projective_points(k, p);
    subs_.resize(N + 1);
    for (std::uint32_t h = 1; h <= N; ++h) subs_[h] = proper_sub_blocks(h);
    pt_.p = p;
    pt_.n = n;
    pt_.Y.assign(N, Vec{1});
    if (kind != VarietyKind::C) pt_.Z.assign(N, Vec{1});
    for (std::uint32_t h = 1; h <= N; ++h)
      if (popcount(h) >= 2) blocks_.push_back(h);
    if (kind == VarietyKind::X0) fiber_points_ = projective_points(2 * n, p);
  }

  // Visits every point whose first Y-block has index congruent to shard.
  void run(unsigned shard, unsigned shards, const std::function<void(const MultiProjectivePointFp&)>& visit) {
    visit_ = &visit;
    shard_ = shard;
    shards_ = shards;
    y_block(0);
  }

  i64 fiber_min = std::numeric_limits<i64>::max();
  i64 fiber_max = 0;

 private:
  void y_block(std::size_t k) {
    if (k == blocks_.size()) {
      if (kind_ == VarietyKind::C)
        (*visit_)(pt_);
      else
        z_lifts();
      return;
    }
    const std::uint32_t h = blocks_[k];
    const auto& cands = points_[popcount(h)];
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (k == 0 && c % shards_ != shard_) continue;
      bool ok = true;
      for (const PairMap& m : subs_[h])
        if (!compatible(cands[c], pt_.Y[m.J - 1], m, p_)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pt_.Y[h - 1] = cands[c];
      y_block(k + 1);
    }
  }

  void z_lifts() {
    i64 lifts = 0;
    z_block(0, lifts);
    fiber_min = std::min(fiber_min, lifts);
    fiber_max = std::max(fiber_max, lifts);
  }

  void z_block(std::size_t k, i64& lifts) {
    if (k == blocks_.size()) {
      ++lifts;
      if (kind_ == VarietyKind::B0)
        (*visit_)(pt_);
      else
        fiber();
      return;
    }
    const std::uint32_t h = blocks_[k];
    for (const Vec& cand : points_[popcount(h)]) {
      if (!products_equal(pt_.Y[h - 1], cand, p_)) continue;
      bool ok = true;
      for (const PairMap& m : subs_[h])
        if (!compatible(cand, pt_.Z[m.J - 1], m, p_)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pt_.Z[h - 1] = cand;
      z_block(k + 1, lifts);
    }
  }

  void fiber() {
    const Vec& YN = pt_.Y.back();
    const Vec& ZN = pt_.Z.back();
    i64 size = 0;
    for (const Vec& xy : fiber_points_) {
      i64 s = 0;
      for (unsigned i = 0; i < n_; ++i) s += xy[i] * ZN[i];
      if (s % p_ != 0) continue;
      bool ok = true;
      for (unsigned i = 0; i < n_ && ok; ++i)
        for (unsigned j = i + 1; j < n_ && ok; ++j)
          ok = (xy[n_ + i] * YN[j] - xy[n_ + j] * YN[i]) % p_ == 0;
      if (!ok) continue;
      ++size;
      pt_.xy = xy;
      (*visit_)(pt_);
    }
    fiber_min_x = std::min(fiber_min_x, size);
    fiber_max_x = std::max(fiber_max_x, size);
  }

 public:
  i64 fiber_min_x = std::numeric_limits<i64>::max();
  i64 fiber_max_x = 0;

 private:
  VarietyKind kind_;
  unsigned n_;
  i64 p_;
  std::vector<std::vector<Vec>> points_;
  std::vector<std::vector<PairMap>> subs_;
  std::vector<std::uint32_t> blocks_;
  std::vector<Vec> fiber_points_;
  MultiProjectivePointFp pt_;
  const std::function<void(const MultiProjectivePointFp&)>* visit_ = nullptr;
  unsigned shard_ = 0, shards_ = 1;
};

void check_budget(VarietyKind kind, unsigned n, i64 p) {
  require(is_prime(p), "p must be prime");
  require(n >= 2, "n must be at least 2");
  if (!within_budget(kind, n, p))
    throw ResourceLimit(std::string("enumeration of ") + to_string(kind) + " outside budget");
}

bool normalized(const Vec& v, i64 p) {
  for (i64 c : v) {
    if (c < 0 || c >= p) return false;
  }
  auto it = std::find_if(v.begin(), v.end(), [](i64 c) { return c != 0; });
  return it != v.end() && *it == 1;
}

}  // namespace

const char* to_string(VarietyKind k) {
  switch (k) {
    case VarietyKind::C: return "C";
    case VarietyKind::B0: return "B0";
    case VarietyKind::X0: return "X0";
  }
  return "?";
}

VarietyKind parse_variety_kind(const std::string& s) {
  if (s == "C") return VarietyKind::C;
  if (s == "B0") return VarietyKind::B0;
  if (s == "X0") return VarietyKind::X0;
  throw ContractViolation("unknown variety kind: " + s);
}

bool within_budget(VarietyKind kind, unsigned n, std::int64_t p) {
  switch (kind) {
    case VarietyKind::C: return n >= 2 && n <= 4 && p <= 7;
    case VarietyKind::B0: return n >= 2 && n <= 3 && p <= 5;
    case VarietyKind::X0: return n >= 2 && n <= 3 && p <= 3;
  }
  return false;
}

std::vector<std::vector<std::int64_t>> projective_points(unsigned k, std::int64_t p) {
  require(k >= 1 && p >= 2, "invalid projective space");
  std::vector<Vec> out;
  for (unsigned lead = 0; lead < k; ++lead) {
    Vec v(k, 0);
    v[lead] = 1;
    // Coordinates after the leading one run over F_p.
    while (true) {
      out.push_back(v);
      unsigned i = lead + 1;
      while (i < k && v[i] == p - 1) v[i++] = 0;
      if (i >= k) break;
      ++v[i];
    }
  }
  return out;
}

void for_each_point(VarietyKind kind, unsigned n, std::int64_t p,
                    const std::function<void(const MultiProjectivePointFp&)>& visit) {
  check_budget(kind, n, p);
  Enumerator(kind, n, p).run(0, 1, visit);
}

VarietyCountFp enumerate_variety(VarietyKind kind, unsigned n, std::int64_t p, bool verify,
                                 unsigned shards) {
  check_budget(kind, n, p);
  require(shards >= 1, "shard count must be positive");
  struct Part {
    i64 count = 0;
    bool ok = true;
    i64 fmin = std::numeric_limits<i64>::max(), fmax = 0;
  };
  auto work = [&](unsigned s) {
    Part part;
    Enumerator e(kind, n, p);
    e.run(s, shards, [&](const MultiProjectivePointFp& pt) {
      ++part.count;
      if (verify && !satisfies_equations(kind, pt)) part.ok = false;
    });
    if (kind == VarietyKind::B0) {
      part.fmin = e.fiber_min;
      part.fmax = e.fiber_max;
    } else if (kind == VarietyKind::X0) {
      part.fmin = e.fiber_min_x;
      part.fmax = e.fiber_max_x;
    }
    return part;
  };
  std::vector<Part> parts;
  if (shards == 1) {
    parts.push_back(work(0));
  } else {
    std::vector<std::future<Part>> futures;
    for (unsigned s = 0; s < shards; ++s) futures.push_back(std::async(std::launch::async, work, s));
    for (auto& f : futures) parts.push_back(f.get());
  }
  VarietyCountFp out;
  out.kind = kind;
  out.n = n;
  out.p = p;
  out.verified = verify;
  out.fiber_min = std::numeric_limits<i64>::max();
  for (const Part& part : parts) {
    out.count += part.count;
    out.verified = out.verified && part.ok;
    out.fiber_min = std::min(out.fiber_min, part.fmin);
    out.fiber_max = std::max(out.fiber_max, part.fmax);
  }
  if (kind == VarietyKind::C || out.fiber_min == std::numeric_limits<i64>::max()) out.fiber_min = out.fiber_max = 0;
  return out;
}

bool satisfies_equations(VarietyKind kind, const MultiProjectivePointFp& pt) {
  const unsigned n = pt.n;
  const i64 p = pt.p;
  const std::uint32_t N = full_index(n);
  if (pt.Y.size() != N) return false;
  const bool has_z = kind != VarietyKind::C;
  if (has_z && pt.Z.size() != N) return false;

  auto coord = [](const Vec& block, std::uint32_t I, unsigned k) {
    unsigned pos = 0;
    for (unsigned j = 0; j < k; ++j) pos += I >> j & 1u;
    return block[pos];
  };
  for (std::uint32_t I = 1; I <= N; ++I) {
    if (pt.Y[I - 1].size() != popcount(I) || !normalized(pt.Y[I - 1], p)) return false;
    if (has_z) {
      if (pt.Z[I - 1].size() != popcount(I) || !normalized(pt.Z[I - 1], p)) return false;
      // Y_k Z_k agree across the block.
      i64 first = -1;
      for (unsigned k = 0; k < n; ++k) {
        if (!(I >> k & 1u)) continue;
        const i64 v = coord(pt.Y[I - 1], I, k) * coord(pt.Z[I - 1], I, k) % p;
        if (first < 0) first = v;
        if (v != first) return false;
      }
    }
    // Compatibility of Y and Z with every J strictly inside I.
    for (std::uint32_t J = 1; J <= N; ++J) {
      if (J == I || (J & ~I) != 0) continue;
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
          if (!(J >> k & 1u) || !(J >> l & 1u)) continue;
          const i64 y = coord(pt.Y[I - 1], I, k) * coord(pt.Y[J - 1], J, l) -
                        coord(pt.Y[I - 1], I, l) * coord(pt.Y[J - 1], J, k);
          if (y % p != 0) return false;
          if (has_z) {
            const i64 z = coord(pt.Z[I - 1], I, k) * coord(pt.Z[J - 1], J, l) -
                          coord(pt.Z[I - 1], I, l) * coord(pt.Z[J - 1], J, k);
            if (z % p != 0) return false;
          }
        }
    }
  }
  if (kind != VarietyKind::X0) return true;
  if (pt.xy.size() != 2 * n || !normalized(pt.xy, p)) return false;
  // The fiber: a linear form in x and y proportional to the last Y-block.
  i64 s = 0;
  for (unsigned i = 0; i < n; ++i) s += pt.xy[i] * pt.Z[N - 1][i];
  if (s % p != 0) return false;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if ((pt.xy[n + i] * pt.Y[N - 1][j] - pt.xy[n + j] * pt.Y[N - 1][i]) % p != 0) return false;
  return true;
}

}  // namespace wn
