#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hbcomp/commands.hpp"
#include "hbcomp/error.hpp"
#include "hbcomp/gallery.hpp"

namespace py = pybind11;
using namespace hbcomp;

namespace {

// JSON text in, JSON text out; the Python side does the dict conversion.
ProblemSpec spec_of(const std::string& text, const std::map<std::string, double>& tol) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  ProblemSpec s = parse_problem(j);
  for (const auto& [k, v] : tol) s.tol.set(k, v);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "hbcomp core: composition operators on H(b) for rational b";
  m.attr("__version__") = HBCOMP_VERSION;
  py::register_exception<Error>(m, "HbcompError", PyExc_ValueError);

  using Tol = std::map<std::string, double>;
  m.def("mate", [](const std::string& p, const Tol& t) { return dump(mate_command(spec_of(p, t))); },
        py::arg("problem"), py::arg("tol") = Tol{});
  m.def("hb_membership", [](const std::string& p, const Tol& t) { return dump(membership_command(spec_of(p, t))); },
        py::arg("problem"), py::arg("tol") = Tol{});
  m.def("u", [](const std::string& p, const Tol& t) { return dump(u_command(spec_of(p, t))); },
        py::arg("problem"), py::arg("tol") = Tol{});
  m.def(
      "analyze",
      [](const std::string& p, bool scan, const Tol& t) {
        const ProblemSpec s = spec_of(p, t);
        py::gil_scoped_release nogil;
        return dump(analyze_command(s, scan));
      },
      py::arg("problem"), py::arg("scan") = false, py::arg("tol") = Tol{});
  m.def(
      "scan_csv",
      [](const std::string& p, const Tol& t) {
        const ProblemSpec s = spec_of(p, t);
        py::gil_scoped_release nogil;
        return scan_csv(s);
      },
      py::arg("problem"), py::arg("tol") = Tol{});
  m.def(
      "matrix",
      [](const std::string& p, const std::string& basis, const Tol& t) {
        if (basis != "hb" && basis != "h2") throw Error(ErrorCode::SchemaError, "basis must be 'hb' or 'h2'");
        return dump(matrix_command(spec_of(p, t), basis == "hb" ? Basis::HbSplit : Basis::H2Monomials));
      },
      py::arg("problem"), py::arg("basis") = "hb", py::arg("tol") = Tol{});
  m.def(
      "gallery",
      [](const std::string& filter, const Tol& t) {
        Tolerances tol;
        for (const auto& [k, v] : t) tol.set(k, v);
        py::list out;
        for (const auto& r : run_gallery(filter, tol)) {
          py::dict d;
          d["name"] = r.name;
          d["tags"] = r.tags;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("filter") = "", py::arg("tol") = Tol{});
}
