#include "wn/cli.hpp"

#include "wn/binary_order.hpp"
#include "wn/constants.hpp"
#include "wn/point_count.hpp"
#include "wn/toric_fp.hpp"
#include "wn/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <regex>

namespace wn {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

// Non-finite values have no JSON literal.
Json real(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json interval(const Interval& i) { return Json{{"value", real(i.value)}, {"lower", real(i.lower)}, {"upper", real(i.upper)}}; }

Json estimate(const MCEstimate& e) {
  return Json{{"value", real(e.value)}, {"standard_error", real(e.standard_error)}, {"samples", e.samples}, {"seed", e.seed}};
}

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

  void emit(const Json& report) {
    if (!csv_) {
      out_ << report.dump() << '\n';
      return;
    }
    std::vector<std::string> keys;
    for (const auto& [k, v] : report.items()) keys.push_back(k);
    if (keys != last_keys_) {
      for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "," : "") << csv_field(keys[i]);
      out_ << '\n';
      last_keys_ = keys;
    }
    std::size_t i = 0;
    for (const auto& [k, v] : report.items()) out_ << (i++ ? "," : "") << csv_field(v);
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  bool csv_;
  std::vector<std::string> last_keys_;
};

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    if (!std::regex_match(item, std::regex(R"(\d+)"))) throw ContractViolation("malformed integer list: " + text);
    out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

}  // namespace

BigInt parse_height_bound(const std::string& text) {
  static const std::regex pattern(R"(^\+?(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern) || (m[1].length() == 0 && m[2].length() == 0))
    throw ContractViolation("malformed height bound: " + text);
  const std::string digits = m[1].str() + m[2].str();
  long exponent = m[3].matched ? std::stol(m[3].str()) : 0;
  exponent -= static_cast<long>(m[2].length());
  if (std::labs(exponent) > 4000) throw ContractViolation("height bound exponent out of range: " + text);
  BigInt num(digits.empty() ? "0" : digits), den = 1, ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0)
    num *= ten;
  else
    den = ten;
  BigInt B;
  mpz_fdiv_q(B.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return B;
}

int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting points of bounded height on W_n and its leading constant", "wnmanin"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  unsigned n = 3;
  unsigned shards = 1;
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = 10000000;
  std::int64_t prime_limit = 1000000;
  auto shard_opt = [&](CLI::App* sub) {
    sub->add_option("--shards", shards, "Worker threads")->check(CLI::Range(1u, 1024u));
  };
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", seed, "Random seed"); };

  auto* factorize_cmd = app.add_subcommand("factorize", "Reduced tuple of a positive y");
  std::string y_text;
  factorize_cmd->add_option("--n", n, "Dimension")->required()->check(CLI::Range(2u, kMaxDimension));
  factorize_cmd->add_option("--y", y_text, "Comma-separated y_1,...,y_n")->required();

  auto* count_cmd = app.add_subcommand("count", "Count N(B; U_n)");
  std::string B_text = "1000";
  std::string method_text = "direct";
  count_cmd->add_option("--n", n, "Dimension")->required()->check(CLI::Range(3u, 8u));
  count_cmd->add_option("--B", B_text, "Height bound, scientific notation allowed")->required();
  count_cmd->add_option("--method", method_text, "direct, moebius or torsor");
  shard_opt(count_cmd);

  auto* constant_cmd = app.add_subcommand("constant", "Leading constant by two routes");
  std::uint64_t volume_samples = 2000000;
  double tolerance = 1e-8;
  constant_cmd->add_option("--n", n, "Dimension")->required()->check(CLI::Range(3u, 4u));
  constant_cmd->add_option("--prime-limit", prime_limit, "Largest prime in the Euler products")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
  constant_cmd->add_option("--mc-samples", mc_samples, "Monte Carlo samples")->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  constant_cmd->add_option("--volume-samples", volume_samples, "Samples for the polytope volume")
      ->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  constant_cmd->add_option("--tolerance", tolerance, "Quadrature tolerance")->check(CLI::PositiveNumber);
  seed_opt(constant_cmd);
  shard_opt(constant_cmd);

  auto* polytope_cmd = app.add_subcommand("polytope", "Volume of the polytope P_n");
  std::string volume_method = "exact";
  std::uint64_t samples = 1000000;
  polytope_cmd->add_option("--n", n, "Dimension")->required()->check(CLI::Range(3u, 8u));
  polytope_cmd->add_option("--method", volume_method, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
  polytope_cmd->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  seed_opt(polytope_cmd);
  shard_opt(polytope_cmd);

  auto* toric_cmd = app.add_subcommand("toric", "Points of C_n, B_0 or X_0 over F_p");
  std::string kind_text = "C";
  std::int64_t p = 2;
  bool no_verify = false;
  toric_cmd->add_option("--kind", kind_text, "C, B0 or X0")->check(CLI::IsMember({"C", "B0", "X0"}));
  toric_cmd->add_option("--n", n, "Dimension")->required()->check(CLI::Range(2u, 8u));
  toric_cmd->add_option("--p", p, "Prime")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  toric_cmd->add_flag("--no-verify", no_verify, "Skip the independent equation check");
  shard_opt(toric_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::string verify_B = "10000";
  verify_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n", n, "Dimension for the methods suite")->check(CLI::Range(3u, 8u));
  verify_cmd->add_option("--B", verify_B, "Height bound for the methods suite");
  verify_cmd->add_option("--mc-samples", mc_samples, "Monte Carlo samples")->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  verify_cmd->add_option("--prime-limit", prime_limit, "Largest prime in the Euler products")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
  seed_opt(verify_cmd);
  shard_opt(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  Emitter emit(out, format == "csv");
  const auto t0 = Clock::now();
  try {
    if (factorize_cmd->parsed()) {
      const std::vector<BigInt> y = parse_list(y_text);
      require(y.size() == n, "expected n entries in --y");
      const ReducedTuple z = factorize(y);
      const YTuple<BigInt> back = compose(z);
      Json ys = Json::array(), zs = Json::array();
      for (const BigInt& v : y) ys.push_back(big(v));
      for (const BigInt& v : z.z) zs.push_back(big(v));
      emit.emit(Json{{"subcommand", "factorize"}, {"n", n}, {"y", ys}, {"z", zs}, {"lcm", big(back.lcm)},
                     {"round_trip", back.y == y}, {"wall_seconds", elapsed(t0)}});
      return exit_ok;
    }
    if (count_cmd->parsed()) {
      const BigInt B = parse_height_bound(B_text);
      const CountMethod method = parse_count_method(method_text);
      const CountReport r = count_points(n, B, method, shards);
      emit.emit(Json{{"subcommand", "count"}, {"n", n}, {"B", big(B)}, {"method", to_string(method)},
                     {"shards", shards}, {"count", r.count}, {"ratio", real(r.ratio)},
                     {"wall_seconds", r.seconds}});
      return exit_ok;
    }
    if (constant_cmd->parsed()) {
      ConstantConfig cfg;
      cfg.prime_limit = prime_limit;
      cfg.mc_samples = mc_samples;
      cfg.volume_samples = volume_samples;
      cfg.seed = seed;
      cfg.shards = shards;
      cfg.quadrature_tolerance = tolerance;
      const ConstantBreakdown c = assemble_constant(n, cfg);
      Json V{{"value", real(c.V.value())}, {"standard_error", real(c.V.error())},
             {"method", c.V.method == VolumeMethod::exact ? "exact" : "mc"}};
      if (c.V.exact) V["exact"] = c.V.exact->get_str();
      else {
        V["samples"] = c.V.estimate.samples;
        V["seed"] = c.V.estimate.seed;
      }
      Json bt{{"value", real(c.beta_tilde.value)}, {"error", real(c.beta_tilde.error)}, {"method", c.beta_tilde.method}};
      if (c.beta_tilde.method == "mc") {
        bt["samples"] = c.beta_tilde.samples;
        bt["seed"] = c.beta_tilde.seed;
      }
      emit.emit(Json{{"subcommand", "constant"}, {"n", n}, {"prime_limit", prime_limit}, {"mc_samples", mc_samples},
                     {"volume_samples", volume_samples}, {"seed", seed}, {"shards", shards},
                     {"tolerance", tolerance}, {"V", V}, {"beta_tilde", bt},
                     {"euler_product", interval(c.euler_product.value)}, {"F_at_1", interval(c.f_one.value)},
                     {"zeta_n", interval(c.zeta)}, {"F_over_zeta", interval(c.f_over_zeta)},
                     {"alpha", real(c.alpha)}, {"beta", real(c.beta_brauer)},
                     {"omega_infinity", estimate(c.omega_infinity)}, {"c_formula", real(c.c_formula)},
                     {"c_formula_relative_error", real(c.c_formula_error)}, {"c_peyre", real(c.c_peyre)},
                     {"c_peyre_relative_error", real(c.c_peyre_error)},
                     {"relative_discrepancy", real(c.relative_discrepancy)},
                     {"discrepancy_bound", real(c.discrepancy_bound)}, {"wall_seconds", elapsed(t0)}});
      return exit_ok;
    }
    if (polytope_cmd->parsed()) {
      const VolumeMethod method = volume_method == "exact" ? VolumeMethod::exact : VolumeMethod::mc;
      const PolytopeVolume v = polytope_V(n, method, samples, seed, shards);
      Json r{{"subcommand", "polytope"}, {"n", n}, {"method", volume_method},
             {"dimension", polytope_system(n).dimension()}, {"volume", real(v.value())},
             {"standard_error", real(v.error())}};
      if (v.exact) r["exact"] = v.exact->get_str();
      else {
        r["samples"] = v.estimate.samples;
        r["seed"] = v.estimate.seed;
        r["shards"] = shards;
      }
      r["wall_seconds"] = elapsed(t0);
      emit.emit(r);
      return exit_ok;
    }
    if (toric_cmd->parsed()) {
      const VarietyKind kind = parse_variety_kind(kind_text);
      const VarietyCountFp r = enumerate_variety(kind, n, p, !no_verify, shards);
      emit.emit(Json{{"subcommand", "toric"}, {"kind", to_string(kind)}, {"n", n}, {"p", p}, {"shards", shards},
                     {"count", r.count}, {"verified", r.verified}, {"fiber_min", r.fiber_min},
                     {"fiber_max", r.fiber_max}, {"wall_seconds", elapsed(t0)}});
      return no_verify || r.verified ? exit_ok : exit_verification;
    }
    if (verify_cmd->parsed()) {
      SuiteOptions opt;
      opt.n = n;
      opt.B = parse_height_bound(verify_B);
      opt.seed = seed;
      opt.shards = shards;
      opt.mc_samples = mc_samples;
      opt.prime_limit = prime_limit;
      const auto results = verification_suite(suite, opt);
      std::size_t failed = 0;
      for (const CheckResult& c : results) {
        failed += !c.passed;
        emit.emit(Json{{"subcommand", "verify"}, {"suite", c.suite}, {"check", c.name},
                       {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}, {"wall_seconds", c.seconds}});
      }
      emit.emit(Json{{"subcommand", "verify"}, {"suite", suite}, {"n", n}, {"B", big(opt.B)}, {"seed", seed},
                     {"mc_samples", mc_samples}, {"prime_limit", prime_limit}, {"shards", shards},
                     {"checks", results.size()}, {"failed", failed}, {"status", failed ? "fail" : "pass"},
                     {"wall_seconds", elapsed(t0)}});
      return failed ? exit_verification : exit_ok;
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_resource;
  } catch (const ComponentFailure& e) {
    err << "component failure: " << e.what() << '\n';
    return exit_resource;
  } catch (const std::logic_error& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_resource;
  }
  return exit_usage;
}

}  // namespace wn
