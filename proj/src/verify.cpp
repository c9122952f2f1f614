#include "wn/verify.hpp"

#include "wn/binary_order.hpp"
#include "wn/constants.hpp"
#include "wn/lattice_count.hpp"
#include "wn/point_count.hpp"
#include "wn/toric_fp.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace wn {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    const auto t0 = Clock::now();
    CheckResult r{suite_, name, false, "", 0};
    try {
      bool ok = true;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(std::move(r));
  }

  std::vector<CheckResult> out;

 private:
  std::string suite_;
};

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

BigInt lcm_vector(const std::vector<BigInt>& y) {
  BigInt l = 1;
  for (const BigInt& v : y) l = lcm_of(l, v);
  return l;
}

// compose(factorize(y)) reproduces y and its lcm equals the product of the z_h.
bool round_trip(const std::vector<BigInt>& y) {
  const ReducedTuple z = factorize(y);
  if (!is_reduced(z)) return false;
  const YTuple<BigInt> back = compose(z);
  return back.y == y && back.lcm == lcm_vector(y);
}

std::vector<CheckResult> bijection(const SuiteOptions& opt) {
  Recorder rec("bijection");
  rec.run("factorize_exhaustive_n3", [](bool& ok) {
    std::int64_t cases = 0, bad = 0;
    for (int a = 1; a <= 30; ++a)
      for (int b = 1; b <= 30; ++b)
        for (int c = 1; c <= 30; ++c) {
          ++cases;
          bad += !round_trip({BigInt(a), BigInt(b), BigInt(c)});
        }
    ok = bad == 0;
    return cat(cases, " cases, ", bad, " failures");
  });
  for (unsigned n : {4u, 5u}) {
    rec.run(cat("factorize_random_n", n), [&, n](bool& ok) {
      std::mt19937_64 rng(opt.seed + n);
      std::int64_t bad = 0;
      for (int i = 0; i < 10000; ++i) {
        // Products of small primes give tuples with rich gcd structure.
        std::vector<BigInt> y(n);
        for (BigInt& v : y) {
          v = 1;
          for (std::int64_t q : {2, 3, 5, 7}) {
            const auto e = rng() % 4;
            for (unsigned k = 0; k < e; ++k) v *= q;
          }
        }
        bad += !round_trip(y);
      }
      ok = bad == 0;
      return cat("10000 cases, ", bad, " failures");
    });
  }
  rec.run("torsor_round_trip_n3", [](bool& ok) {
    std::int64_t sols = 0, bad = 0, torsor = 0;
    for_each_primitive_solution(3, 6, [&](const PrimitiveSolution& s) {
      ++sols;
      if (torsor_push(torsor_lift(s)) != s) ++bad;
    });
    for_each_torsor_point(3, 6, [&](const TorsorPoint& t) {
      ++torsor;
      if (torsor_lift(torsor_push(t)) != t) ++bad;
    });
    ok = bad == 0 && sols == torsor;
    return cat(sols, " solutions, ", torsor, " torsor points, ", bad, " failures");
  });
  return rec.out;
}

// Random reduced tuple with entries at most 6.
ReducedTuple random_reduced(unsigned n, std::mt19937_64& rng) {
  ReducedTuple z(n);
  const std::uint32_t N = full_index(n);
  for (std::uint32_t h = 1; h <= N; ++h) {
    const BigInt v = static_cast<long>(1 + rng() % 6);
    bool fits = true;
    for (std::uint32_t l = 1; l < h && fits; ++l)
      fits = comparable(h, l) || gcd_of(v, z[l]) == 1;
    if (fits) z[h] = v;
  }
  return z;
}

std::vector<CheckResult> lattice(const SuiteOptions& opt) {
  Recorder rec("lattice");
  rec.run("count_A_vs_grid", [&](bool& ok) {
    std::mt19937_64 rng(opt.seed);
    std::int64_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const unsigned n = 3 + static_cast<unsigned>(rng() % 2);
      const ReducedTuple z = random_reduced(n, rng);
      const auto X = static_cast<std::int64_t>(rng() % 13);
      const auto d = to_int64(lattice_coefficients(z).d);
      bad += count_A_exact(z, X) != count_A_grid(d, X);
    }
    ok = bad == 0;
    return cat("1000 instances, ", bad, " mismatches");
  });
  rec.run("count_congruence_vs_grid", [&](bool& ok) {
    std::mt19937_64 rng(opt.seed + 1);
    std::int64_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const unsigned n = 3 + static_cast<unsigned>(rng() % 2);
      const ReducedTuple z = random_reduced(n, rng);
      const auto X = static_cast<std::int64_t>(rng() % 13);
      const unsigned r = 1 + static_cast<unsigned>(rng() % (n - 1));
      const auto lc = lattice_coefficients(z);
      const auto d = to_int64(lc.d);
      bad += count_congruence(z, r, X) != count_congruence_grid(d, lc.d1r[r].get_si(), r, X);
    }
    ok = bad == 0;
    return cat("1000 instances, ", bad, " mismatches");
  });
  rec.run("slab_volume_values", [](bool& ok) {
    ok = slab_volume({1, 1}, 1) == 3 && slab_volume({1, 2}, 1) == 2 && slab_volume({2, 1}, 0) == 0 &&
         slab_volume({1, 1, 1}, 3) == 8;
    return std::string("slab volumes of small boxes");
  });
  return rec.out;
}

std::vector<CheckResult> methods(const SuiteOptions& opt) {
  Recorder rec("methods");
  const unsigned n = opt.n;
  rec.run(cat("agree_n", n, "_B", opt.B.get_str()), [&](bool& ok) {
    const auto d = count_points(n, opt.B, CountMethod::direct, opt.shards).count;
    const auto m = count_points(n, opt.B, CountMethod::moebius, opt.shards).count;
    const auto t = count_points(n, opt.B, CountMethod::torsor, opt.shards).count;
    ok = d == m && m == t;
    return cat("direct ", d, ", moebius ", m, ", torsor ", t);
  });
  rec.run(cat("bruteforce_n", n), [&](bool& ok) {
    const std::int64_t X = n == 3 ? 3 : 2;
    BigInt B = 1;
    for (unsigned k = 0; k < n; ++k) B *= X;
    const auto brute = count_points_bruteforce(n, X);
    const auto fast = count_points(n, B, CountMethod::direct).count;
    ok = brute == fast;
    return cat("B = ", B.get_str(), ": brute force ", brute, ", direct ", fast);
  });
  rec.run("unit_height_n3", [](bool& ok) {
    const auto c = count_points(3, 1, CountMethod::direct).count;
    ok = c == 28;
    return cat("N(1) = ", c);
  });
  return rec.out;
}

std::vector<CheckResult> polynomials(const SuiteOptions&) {
  Recorder rec("polynomials");
  rec.run("eulerian_equals_excedance", [](bool& ok) {
    for (unsigned n = 1; n <= 7; ++n) ok = ok && eulerian_polynomial(n) == excedance_polynomial(n);
    return std::string("n = 1..7");
  });
  rec.run("eulerian_small", [](bool& ok) {
    ok = eulerian_polynomial(3) == IntPolynomial{1, 4, 1} &&
         eulerian_polynomial(4) == IntPolynomial{1, 11, 11, 1} &&
         eulerian_polynomial(5) == IntPolynomial{1, 26, 66, 26, 1};
    return cat("P_5 = ", eulerian_polynomial(5).to_string());
  });
  rec.run("local_factor_graph_n3", [](bool& ok) {
    const IntPolynomial g = local_factor_poly_graph(3);
    const IntPolynomial expected{1, 0, -9, 16, -9, 0, 1};
    // b_2 = -2^{n-1}(2^n + 1) + 3^n.
    const BigInt b2 = -4 * 9 + 27;
    ok = g == expected && g == local_factor_poly(3) && g.coefficient(2) == b2 && g.coefficient_sum() == 0;
    return cat("b = ", g.to_string());
  });
  rec.run("palindromic", [](bool& ok) {
    for (unsigned n = 1; n <= 7; ++n) ok = ok && eulerian_polynomial(n).palindromic();
    return std::string("n = 1..7");
  });
  return rec.out;
}

std::vector<CheckResult> toric(const SuiteOptions&) {
  Recorder rec("toric");
  for (auto kind : {VarietyKind::C, VarietyKind::B0, VarietyKind::X0}) {
    for (unsigned n = 2; n <= 4; ++n)
      for (std::int64_t p : {2, 3, 5, 7}) {
        if (!within_budget(kind, n, p)) continue;
        rec.run(cat(to_string(kind), "_n", n, "_p", p), [kind, n, p](bool& ok) {
          const VarietyCountFp r = enumerate_variety(kind, n, p);
          // p^{n-1} P_n(1/p) counts C_n; B0 agrees and X0 is a P^{n-1}-bundle over it.
          Rational expected = eulerian_polynomial(n)(Rational(1, p));
          for (unsigned k = 1; k < n; ++k) expected *= p;
          std::int64_t bundle = 0, pk = 1;
          for (unsigned k = 0; k < n; ++k, pk *= p) bundle += pk;
          std::int64_t fiber = 0;
          if (kind == VarietyKind::B0) fiber = 1;
          if (kind == VarietyKind::X0) {
            expected *= bundle;
            fiber = bundle;
          }
          ok = r.verified && Rational(r.count) == expected &&
               (kind == VarietyKind::C || (r.fiber_min == fiber && r.fiber_max == fiber));
          return cat("count ", r.count, ", expected ", expected.get_str(), ", fibers [", r.fiber_min, ", ",
                     r.fiber_max, "]");
        });
      }
  }
  return rec.out;
}

std::vector<CheckResult> constants(const SuiteOptions& opt) {
  Recorder rec("constants");
  rec.run("volume_n3", [](bool& ok) {
    const PolytopeVolume v = polytope_V(3, VolumeMethod::exact);
    ok = v.exact && *v.exact == Rational(1, 16);
    return cat("V = ", v.exact ? v.exact->get_str() : "?");
  });
  rec.run("beta_tilde_closed_form_n3", [&](bool& ok) {
    const BetaTilde b = beta_tilde(3);
    const double closed = std::numbers::pi * std::numbers::pi / 6 + 4 * std::numbers::ln2 - 0.5;
    ok = std::abs(b.value - closed) < 1e-9;
    return cat("quadrature ", b.value, ", closed form ", closed);
  });
  rec.run("compact_integral_n3", [&](bool& ok) {
    const BetaTilde b = beta_tilde(3);
    const MCEstimate j = compact_integral(3, opt.mc_samples, opt.seed, opt.shards);
    ok = std::abs(j.value - b.value) <= 3 * std::hypot(j.standard_error, b.error);
    return cat("J = ", j.value, " +- ", j.standard_error, ", beta_tilde = ", b.value);
  });
  rec.run("constant_consistency_n3", [&](bool& ok) {
    ConstantConfig cfg;
    cfg.prime_limit = opt.prime_limit;
    cfg.mc_samples = opt.mc_samples;
    cfg.seed = opt.seed;
    cfg.shards = opt.shards;
    const ConstantBreakdown c = assemble_constant(3, cfg);
    ok = std::abs(c.relative_discrepancy) <= std::min(1e-3, c.discrepancy_bound);
    return cat("c_formula ", c.c_formula, ", c_peyre ", c.c_peyre, ", discrepancy ", c.relative_discrepancy,
               ", bound ", c.discrepancy_bound);
  });
  return rec.out;
}

using Suite = std::vector<CheckResult> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r{
      {"bijection", bijection}, {"lattice", lattice},     {"methods", methods},
      {"polynomials", polynomials}, {"toric", toric}, {"constants", constants}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<CheckResult> verification_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    auto part = fn(options);
    out.insert(out.end(), part.begin(), part.end());
  }
  require(found, "unknown verification suite: " + name);
  return out;
}

}  // namespace wn
