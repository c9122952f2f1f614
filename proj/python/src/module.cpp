#include "wn/binary_order.hpp"
#include "wn/cli.hpp"
#include "wn/constants.hpp"
#include "wn/point_count.hpp"
#include "wn/toric_fp.hpp"
#include "wn/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace wn;

namespace {

BigInt to_big(const py::int_& v) { return BigInt(py::cast<std::string>(py::str(static_cast<py::handle>(v)))); }

py::int_ to_py(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10))); }

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const BigInt& x : v) out.append(to_py(x));
  return out;
}

std::vector<BigInt> to_big(const std::vector<py::int_>& v) {
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(to_big(x));
  return out;
}

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

py::dict interval(const Interval& i) {
  py::dict d;
  d["value"] = i.value;
  d["lower"] = i.lower;
  d["upper"] = i.upper;
  return d;
}

py::dict estimate(const MCEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["standard_error"] = e.standard_error;
  d["samples"] = e.samples;
  d["seed"] = e.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Point counts, leading constants and finite-field checks for W_n";

  static py::exception<ContractViolation> contract(m, "ContractViolation", PyExc_ValueError);
  static py::exception<ResourceLimit> resource(m, "ResourceLimit", PyExc_RuntimeError);
  static py::exception<NonPrimitiveImage> nonprimitive(m, "NonPrimitiveImage", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NonPrimitiveImage& e) {
      PyErr_SetString(nonprimitive.ptr(), e.what());
    } catch (const ContractViolation& e) {
      PyErr_SetString(contract.ptr(), e.what());
    } catch (const ResourceLimit& e) {
      PyErr_SetString(resource.ptr(), e.what());
    }
  });

  m.def(
      "factorize",
      [](const std::vector<py::int_>& y) { return to_py(factorize(to_big(y)).z); },
      py::arg("y"), "Reduced tuple (z_1, ..., z_{2^n-1}) of a positive vector y.");
  m.def(
      "compose",
      [](const std::vector<py::int_>& z) {
        const auto size = z.size() + 1;
        unsigned n = 0;
        while ((std::size_t{1} << n) < size) ++n;
        if ((std::size_t{1} << n) != size) throw ContractViolation("tuple length must be 2^n - 1");
        return to_py(compose(ReducedTuple(n, to_big(z))).y);
      },
      py::arg("z"), "Inverse of factorize.");
  m.def(
      "is_reduced",
      [](unsigned n, const std::vector<py::int_>& z) { return is_reduced(ReducedTuple(n, to_big(z))); },
      py::arg("n"), py::arg("z"));

  m.def(
      "count_points",
      [](unsigned n, const py::int_& B, const std::string& method, unsigned shards) {
        CountReport r;
        const BigInt bound = to_big(B);
        const CountMethod cm = parse_count_method(method);
        {
          py::gil_scoped_release release;
          r = count_points(n, bound, cm, shards);
        }
        py::dict d;
        d["n"] = r.n;
        d["B"] = to_py(r.B);
        d["method"] = to_string(r.method);
        d["count"] = r.count;
        d["ratio"] = r.ratio;
        d["seconds"] = r.seconds;
        d["shards"] = r.shards;
        return d;
      },
      py::arg("n"), py::arg("B"), py::arg("method") = "direct", py::arg("shards") = 1,
      "N(B; U_n) by the chosen pipeline.");
  m.def("count_points_bruteforce", &count_points_bruteforce, py::arg("n"), py::arg("X"));

  m.def("eulerian_polynomial", [](unsigned n) { return to_py(eulerian_polynomial(n).coefficients()); }, py::arg("n"));
  m.def("excedance_polynomial", [](unsigned n) { return to_py(excedance_polynomial(n).coefficients()); }, py::arg("n"));
  m.def("local_factor_poly", [](unsigned n) { return to_py(local_factor_poly(n).coefficients()); }, py::arg("n"));
  m.def("local_factor_poly_graph", [](unsigned n) { return to_py(local_factor_poly_graph(n).coefficients()); },
        py::arg("n"));
  m.def("local_density", [](unsigned n, std::int64_t p) { return fraction(local_density(n, p)); }, py::arg("n"),
        py::arg("p"));

  m.def(
      "enumerate_variety",
      [](const std::string& kind, unsigned n, std::int64_t p, bool verify, unsigned shards) {
        VarietyCountFp r;
        const VarietyKind k = parse_variety_kind(kind);
        {
          py::gil_scoped_release release;
          r = enumerate_variety(k, n, p, verify, shards);
        }
        py::dict d;
        d["kind"] = to_string(r.kind);
        d["n"] = r.n;
        d["p"] = r.p;
        d["count"] = r.count;
        d["verified"] = r.verified;
        d["fiber_min"] = r.fiber_min;
        d["fiber_max"] = r.fiber_max;
        return d;
      },
      py::arg("kind"), py::arg("n"), py::arg("p"), py::arg("verify") = true, py::arg("shards") = 1);

  m.def(
      "polytope_volume",
      [](unsigned n, const std::string& method, std::uint64_t samples, std::uint64_t seed, unsigned shards) {
        if (method != "exact" && method != "mc") throw ContractViolation("method must be exact or mc");
        const PolytopeVolume v =
            polytope_V(n, method == "exact" ? VolumeMethod::exact : VolumeMethod::mc, samples, seed, shards);
        py::dict d;
        d["method"] = method;
        d["value"] = v.value();
        d["standard_error"] = v.error();
        d["exact"] = v.exact ? fraction(*v.exact) : py::none();
        if (!v.exact) {
          d["samples"] = v.estimate.samples;
          d["seed"] = v.estimate.seed;
        }
        return d;
      },
      py::arg("n"), py::arg("method") = "exact", py::arg("samples") = 1000000, py::arg("seed") = 0,
      py::arg("shards") = 1);

  m.def(
      "beta_tilde",
      [](unsigned n, double tolerance, std::uint64_t samples, std::uint64_t seed, unsigned shards) {
        const BetaTilde b = beta_tilde(n, tolerance, samples, seed, shards);
        py::dict d;
        d["value"] = b.value;
        d["error"] = b.error;
        d["method"] = b.method;
        d["samples"] = b.samples;
        d["seed"] = b.seed;
        return d;
      },
      py::arg("n"), py::arg("tolerance") = 1e-8, py::arg("samples") = 10000000, py::arg("seed") = 0,
      py::arg("shards") = 1);

  m.def(
      "assemble_constant",
      [](unsigned n, std::int64_t prime_limit, std::uint64_t mc_samples, std::uint64_t volume_samples,
         std::uint64_t seed, unsigned shards) {
        ConstantConfig cfg;
        cfg.prime_limit = prime_limit;
        cfg.mc_samples = mc_samples;
        cfg.volume_samples = volume_samples;
        cfg.seed = seed;
        cfg.shards = shards;
        ConstantBreakdown c;
        {
          py::gil_scoped_release release;
          c = assemble_constant(n, cfg);
        }
        py::dict d;
        d["n"] = c.n;
        d["V"] = c.V.value();
        d["V_error"] = c.V.error();
        d["beta_tilde"] = c.beta_tilde.value;
        d["beta_tilde_error"] = c.beta_tilde.error;
        d["euler_product"] = interval(c.euler_product.value);
        d["F_at_1"] = interval(c.f_one.value);
        d["zeta_n"] = interval(c.zeta);
        d["alpha"] = c.alpha;
        d["beta"] = c.beta_brauer;
        d["omega_infinity"] = estimate(c.omega_infinity);
        d["c_formula"] = c.c_formula;
        d["c_formula_relative_error"] = c.c_formula_error;
        d["c_peyre"] = c.c_peyre;
        d["c_peyre_relative_error"] = c.c_peyre_error;
        d["relative_discrepancy"] = c.relative_discrepancy;
        d["discrepancy_bound"] = c.discrepancy_bound;
        return d;
      },
      py::arg("n"), py::arg("prime_limit") = 1000000, py::arg("mc_samples") = 10000000,
      py::arg("volume_samples") = 2000000, py::arg("seed") = 0, py::arg("shards") = 1);

  m.def(
      "verify",
      [](const std::string& suite, unsigned n, const py::int_& B, std::uint64_t seed, unsigned shards) {
        SuiteOptions opt;
        opt.n = n;
        opt.B = to_big(B);
        opt.seed = seed;
        opt.shards = shards;
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = verification_suite(suite, opt);
        }
        py::list out;
        for (const CheckResult& c : results) {
          py::dict d;
          d["suite"] = c.suite;
          d["check"] = c.name;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("n") = 3, py::arg("B") = 10000, py::arg("seed") = 0, py::arg("shards") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = execute_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end and returns (exit code, stdout, stderr).");
}
