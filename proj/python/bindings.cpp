#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinsurf/char_classes.hpp"
#include "spinsurf/cli.hpp"
#include "spinsurf/errors.hpp"
#include "spinsurf/exact_arith.hpp"
#include "spinsurf/f2_forms.hpp"
#include "spinsurf/icosa_group.hpp"
#include "spinsurf/json_io.hpp"
#include "spinsurf/seifert.hpp"

namespace py = pybind11;
using namespace spinsurf;

namespace {

py::object py_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(to_string(v)); }

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(py_int(r.num()), py_int(r.den()));
}

QuadraticForm form(int g, const std::string& bits) { return QuadraticForm::from_bitstring(g, bits); }

py::dict example_dict(int k) {
  const IcosahedralExample ex = icosahedral_example(k);
  py::dict d;
  d["index"] = ex.index;
  d["genus"] = ex.genus;
  d["N"] = ex.spec.dimension;
  d["general_formula"] = ex.uses_general_formula;
  d["value"] = fraction(ex.value.residue());
  if (ex.order) d["order"] = *ex.order;
  d["order_candidates"] = std::vector<std::int64_t>(ex.order_candidates.begin(), ex.order_candidates.end());
  py::list fibers;
  for (const FiberDerivation& f : ex.fibers) {
    py::dict fd;
    fd["fixed_points"] = f.fixed_points;
    fd["trace"] = f.trace;
    fd["root_order"] = f.root_order;
    fd["exponents"] = f.multiplicities.exponents;
    fd["multiplicities"] = f.multiplicities.multiplicities;
    fibers.append(fd);
  }
  d["fibers"] = fibers;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of spin surface bundles and Seifert homology spheres";

  static py::exception<Error> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(domain_error, (std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  m.def("arf", [](int g, const std::string& bits) { return arf_basis(form(g, bits)).additive; },
        py::arg("g"), py::arg("basis_values"));
  m.def("arf_gauss", [](int g, const std::string& bits) { return arf_gauss(form(g, bits)).additive; },
        py::arg("g"), py::arg("basis_values"));
  m.def("count_zeros", [](int g, const std::string& bits) { return count_zeros(form(g, bits)); }, py::arg("g"),
        py::arg("basis_values"));
  m.def("count_by_arf", [](int g) {
    const ArfCounts c = count_by_arf(g);
    return std::make_pair(c.n_plus, c.n_minus);
  });
  m.def("enumerate_forms", [](int g) {
    std::vector<std::string> out;
    for (const QuadraticForm& q : enumerate_forms(g)) out.push_back(q.bitstring());
    return out;
  });

  m.def("bernoulli", [](int k) { return fraction(bernoulli(k)); });
  m.def("bernoulli_ratio", [](int k) { return fraction(bernoulli_ratio(k)); });
  m.def("von_staudt_den", [](int k) { return py_int(von_staudt_den(k)); });
  m.def("divisor_oriented", [](int n) { return py_int(divisor_oriented(n)); });
  m.def("divisor_spin", [](int n) {
    const DivisibilityBound b = divisor_spin(n);
    py::dict d;
    d["divisor"] = py_int(b.spin_divisor);
    d["formula"] = b.spin_formula;
    d["maximality"] = maximality_name(b.spin_maximality);
    return d;
  });

  m.def("kappa", [](const std::string& family, int n) {
    if (family == "sphere") return sphere_kappa(n).str();
    if (family == "proj") return proj_bundle_kappa(n).str();
    if (family == "hp") return hp_infinity_kappa(n).str();
    if (family == "torus") return to_string(torus_kappa(n));
    throw Error(ErrorKind::kInvalidArgument, "unknown family " + family);
  });
  m.def("sphere_lambda", [](int n) { return sphere_lambda(n).str(); });
  m.def("lambda_kappa_difference", [](int n) { return lambda_kappa_difference(n).str(); });
  m.def("torus_lambda", [](int n) { return torus_lambda(n).str(); });
  m.def("riemann_roch_dim", [](int g, int power) { return riemann_roch_dim(g, power).dimension; });

  m.def("homology_sphere_value", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    std::vector<FiberPair> fibers;
    for (auto [a, b] : pairs) fibers.push_back({a, b});
    return fraction(homology_sphere_value(SeifertData(fibers)));
  });
  m.def("multiplicity_solve", [](int order, std::int64_t dim, std::int64_t trace, const std::vector<int>& allowed,
                                 bool real) { return multiplicity_solve(order, dim, trace, allowed, real).multiplicities; });
  m.def("icosahedral_example", &example_dict);
  m.def("regular_representation_increment", [] { return fraction(regular_representation_increment().residue()); });
  m.def("stabilized_e", [](std::int64_t n) { return fraction(stabilized_e(n).residue()); });

  m.def("group_order", [] { return enumerate_group().size(); });
  m.def("element_order_census", &element_order_census);
  m.def("verify_perfect", [] { return verify_perfect(); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs one CLI command line; returns (exit status, stdout, stderr).");
}
