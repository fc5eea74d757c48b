#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "fpcomm/errors.hpp"
#include "fpcomm/ff/counting.hpp"
#include "fpcomm/ff/matrix.hpp"
#include "fpcomm/fourier/theta.hpp"
#include "fpcomm/fourier/transform.hpp"
#include "fpcomm/multiparty/uniformize.hpp"
#include "fpcomm/witness/certificate.hpp"

namespace py = pybind11;
using namespace fpcomm;

namespace {

py::object to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(v)), to_py(denominator(v)));
}

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Rational from_py(const py::handle& v) {
  const py::object frac = py::module_::import("fractions").attr("Fraction")(v);
  const BigInt num(py::str(frac.attr("numerator")).cast<std::string>());
  const BigInt den(py::str(frac.attr("denominator")).cast<std::string>());
  return Rational(num, den);
}

ff::FpMatrix matrix(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
  if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
  ff::FpMatrix m(ff::PrimeField(p), rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_fpcomm, m) {
  m.doc() = "Rank-problem communication bounds over F_p";
  py::register_exception<Error>(m, "FpcommError", PyExc_ValueError);

  m.def("count_rank_matrices",
        [](std::uint64_t n, std::uint64_t p, std::uint64_t r) { return to_py(ff::count_rank_matrices(n, p, r)); },
        py::arg("n"), py::arg("p"), py::arg("r"));
  m.def("rank_ratio_alpha", [](std::uint64_t n, std::uint64_t p) { return to_py(ff::rank_ratio_alpha(n, p)); },
        py::arg("n"), py::arg("p"));
  m.def("mat_rank", [](const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
    return ff::mat_rank(matrix(rows, p));
  }, py::arg("rows"), py::arg("p"));

  m.def("theta_hat", [](const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
    return to_py(fourier::theta_hat_closed_exact(matrix(rows, p)));
  }, py::arg("s"), py::arg("p"));
  m.def("theta_hat_l1", [](std::uint64_t n, std::uint64_t p) { return to_py(fourier::theta_hat_l1_exact(n, p)); },
        py::arg("n"), py::arg("p"));
  m.def("dft", [](std::vector<fourier::Complex> values, std::uint32_t p, std::size_t N) {
    return fourier::dft(fourier::GroupFunction::make(p, N, std::move(values))).coefficients;
  }, py::arg("values"), py::arg("p"), py::arg("N"));

  m.def("rank_witness_bound", [](std::uint64_t n, std::uint64_t p, const py::object& eps) {
    return to_py(witness::to_json(witness::rank_witness_bound_exact(n, p, from_py(eps))));
  }, py::arg("n"), py::arg("p"), py::arg("eps"));
  m.def("rank_bound_constant", &witness::rank_bound_constant, py::arg("n"), py::arg("p"), py::arg("eps"));

  m.def("verify_uniformizing", [](const std::string& problem, std::size_t n, std::uint32_t p, std::size_t k,
                                  const std::string& family) {
    const auto prob = multiparty::builtin_problem(problem, n, p, k);
    const auto fam = multiparty::builtin_family(family.empty() ? multiparty::default_family(problem) : family, n, p);
    return to_py(multiparty::to_json(multiparty::verify_uniformizing(prob, fam)));
  }, py::arg("problem"), py::arg("n"), py::arg("p") = 2, py::arg("k") = 0, py::arg("family") = "");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the fpcomm command line in-process; returns (exit code, stdout, stderr).");
}
