#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/numeric/chebyshev.hpp"
#include "circulant/report.hpp"
#include "circulant/verify.hpp"

namespace py = pybind11;

namespace {

using circulant::CirculantSpec;
using circulant::ordered_json;

py::object py_int(const mpz_class& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

CirculantSpec make_spec(std::uint64_t beta, const std::vector<std::uint64_t>& s,
                        const std::vector<std::uint64_t>& alpha,
                        std::uint64_t n) {
  return circulant::validate_spec(beta, s, alpha, n);
}

}  // namespace

PYBIND11_MODULE(_circulant, m) {
  m.doc() =
      "Exact spanning-tree counts of circulant graphs with scaled jumps, "
      "their arithmetic decomposition and Mahler-measure asymptotics.";

  py::register_exception<circulant::spec_error>(m, "SpecError",
                                                PyExc_ValueError);
  py::register_exception<circulant::precision_error>(m, "PrecisionError",
                                                     PyExc_RuntimeError);
  py::register_exception<circulant::not_perfect_square_error>(
      m, "NotPerfectSquareError", PyExc_ArithmeticError);
  py::register_exception<circulant::undefined_squarefree_error>(
      m, "UndefinedSquarefreeError", PyExc_ValueError);
  py::register_exception<circulant::too_large_error>(m, "TooLargeError",
                                                     PyExc_ValueError);

  m.def(
      "validate_json",
      [](std::uint64_t beta, const std::vector<std::uint64_t>& s,
         const std::vector<std::uint64_t>& alpha, std::uint64_t n) {
        return circulant::spec_to_json(make_spec(beta, s, alpha, n)).dump();
      },
      py::arg("beta"), py::arg("s"), py::arg("alpha"), py::arg("n"),
      "Validate parameters; returns the derived fields as JSON.");

  m.def(
      "tau",
      [](std::uint64_t beta, const std::vector<std::uint64_t>& s,
         const std::vector<std::uint64_t>& alpha, std::uint64_t n,
         const std::string& method) {
        CirculantSpec spec = make_spec(beta, s, alpha, n);
        circulant::TauOptions opts;
        opts.method = method;
        ordered_json doc = circulant::tau_document(spec, opts);
        if (!circulant::tau_document_agrees(doc))
          throw circulant::error("method disagreement for " + spec.label());
        return py_int(mpz_class(doc["value"].get<std::string>()));
      },
      py::arg("beta"), py::arg("s"), py::arg("alpha"), py::arg("n"),
      py::arg("method") = "all",
      "Exact spanning-tree count (cross-checked when method='all').");

  m.def(
      "tau_json",
      [](std::uint64_t beta, const std::vector<std::uint64_t>& s,
         const std::vector<std::uint64_t>& alpha, std::uint64_t n,
         const std::string& method, std::uint64_t bruteforce_cap,
         int precision_max) {
        CirculantSpec spec = make_spec(beta, s, alpha, n);
        circulant::TauOptions opts;
        opts.method = method;
        opts.bruteforce_cap = bruteforce_cap;
        opts.precision.max = precision_max;
        return circulant::tau_document(spec, opts).dump();
      },
      py::arg("beta"), py::arg("s"), py::arg("alpha"), py::arg("n"),
      py::arg("method") = "all", py::arg("bruteforce_cap") = 4096,
      py::arg("precision_max") = 1 << 15);

  m.def(
      "decompose_json",
      [](std::uint64_t beta, const std::vector<std::uint64_t>& s,
         const std::vector<std::uint64_t>& alpha, std::uint64_t n) {
        CirculantSpec spec = make_spec(beta, s, alpha, n);
        return circulant::decompose_document(spec, {}).dump();
      },
      py::arg("beta"), py::arg("s"), py::arg("alpha"), py::arg("n"));

  m.def(
      "mahler_json",
      [](std::uint64_t beta, const std::vector<std::uint64_t>& s,
         const std::vector<std::uint64_t>& alpha, std::uint64_t n,
         int target_bits, bool quadrature,
         const std::vector<std::uint64_t>& convergence_n) {
        CirculantSpec spec = make_spec(beta, s, alpha, n);
        circulant::MahlerOptions opts;
        opts.target_bits = target_bits;
        opts.quadrature = quadrature;
        opts.convergence_n = convergence_n;
        return circulant::mahler_document(spec, opts).dump();
      },
      py::arg("beta"), py::arg("s"), py::arg("alpha"), py::arg("n"),
      py::arg("target_bits") = 64, py::arg("quadrature") = true,
      py::arg("convergence_n") = std::vector<std::uint64_t>{});

  m.def(
      "laplacian_json",
      [](std::uint64_t beta, const std::vector<std::uint64_t>& s,
         const std::vector<std::uint64_t>& alpha, std::uint64_t n) {
        return circulant::laplacian_document(make_spec(beta, s, alpha, n))
            .dump();
      },
      py::arg("beta"), py::arg("s"), py::arg("alpha"), py::arg("n"));

  m.def(
      "verify_json",
      [](bool examples_only, int identity_count, std::uint64_t seed) {
        std::vector<circulant::SuiteResult> suites;
        if (examples_only) {
          suites.push_back(circulant::suite_reference_examples());
          return circulant::verify_document(suites, nullptr).dump();
        }
        circulant::Grid grid = circulant::builtin_grid();
        suites.push_back(circulant::suite_oracle_equivalence(grid));
        suites.push_back(circulant::suite_decomposition(grid));
        suites.push_back(circulant::suite_margins(grid));
        suites.push_back(circulant::suite_measure_agreement(grid));
        suites.push_back(
            circulant::suite_product_identity(identity_count, seed));
        suites.push_back(circulant::suite_reference_examples());
        return circulant::verify_document(suites, &grid).dump();
      },
      py::arg("examples_only") = false, py::arg("identity_count") = 200,
      py::arg("seed") = 0x5eed,
      "Run the built-in verification sweep; returns the summary as JSON.");

  m.def(
      "chebyshev_t",
      [](unsigned long n, long x) {
        return py_int(circulant::chebyshev_T(n, mpz_class(x)));
      },
      py::arg("n"), py::arg("x"),
      "Chebyshev polynomial of the first kind at an integer point, exact.");

  m.attr("__version__") = "0.1.0";
}
