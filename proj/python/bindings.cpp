#include "fano/chern_calculus.hpp"
#include "fano/cli.hpp"
#include "fano/enumerator.hpp"
#include "fano/ray_constraints.hpp"
#include "fano/table_oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

py::object to_py(const fano::Integer& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

fano::Integer from_py(const py::int_& n) { return fano::Integer(py::str(n).cast<std::string>()); }

std::vector<fano::TableRow> as_rows(const std::vector<fano::SolutionRecord>& records) {
  std::vector<fano::TableRow> rows;
  for (const auto& r : records) rows.push_back(fano::to_table_row(r));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Enumeration of Fano threefolds of Picard rank 2 and primitive ones of rank 3";

  py::register_exception<fano::Error>(m, "FanoError", PyExc_ValueError);

  m.def(
      "enumerate_json",
      [](int rho, bool primitive_only) {
        return fano::emit(as_rows(fano::enumerate_all(rho, primitive_only)), fano::Format::Json);
      },
      py::arg("rho"), py::arg("primitive_only") = false);

  m.def(
      "ground_truth_json",
      [](int rho, bool primitive_only) { return fano::emit(fano::ground_truth(rho, primitive_only), fano::Format::Json); },
      py::arg("rho"), py::arg("primitive_only") = false);

  m.def(
      "emit",
      [](int rho, bool primitive_only, const std::string& format, bool computed) {
        const auto rows = computed ? as_rows(fano::enumerate_all(rho, primitive_only))
                                   : fano::ground_truth(rho, primitive_only);
        return fano::emit(rows, fano::parse_format(format));
      },
      py::arg("rho"), py::arg("primitive_only") = false, py::arg("format") = "markdown", py::arg("computed") = false);

  m.def(
      "verify",
      [](int rho, bool primitive_only) {
        const auto report = fano::diff(fano::enumerate_all(rho, primitive_only), fano::ground_truth(rho, primitive_only));
        return py::make_tuple(report.empty(), fano::format_report(report));
      },
      py::arg("rho"), py::arg("primitive_only") = false);

  m.def("antican_cube_p1_bundle_over_surface", [](const py::int_& c1_sq, const py::int_& c2, const py::int_& ky_sq) {
    fano::SurfaceBundleData d;
    d.c1_sq = from_py(c1_sq);
    d.c2 = from_py(c2);
    d.Ky_sq = from_py(ky_sq);
    return to_py(fano::antican_cube_p1_bundle_over_surface(d));
  });

  m.def("antican_cube_divisor_in_p2_bundle",
        [](const py::int_& c1_sq, const py::int_& c2, const py::int_& c1_dot_F, const py::int_& c1_dot_Ky,
           const py::int_& F_dot_Ky, const py::int_& Ky_sq, const py::int_& F_sq) {
          fano::SurfaceBundleData d;
          d.c1_sq = from_py(c1_sq);
          d.c2 = from_py(c2);
          d.c1_dot_F = from_py(c1_dot_F);
          d.c1_dot_Ky = from_py(c1_dot_Ky);
          d.F_dot_Ky = from_py(F_dot_Ky);
          d.Ky_sq = from_py(Ky_sq);
          d.F_sq = from_py(F_sq);
          return to_py(fano::antican_cube_divisor_in_p2_bundle(d));
        });

  m.def("genus_from_blowup", [](const py::int_& kx3, const py::int_& ky3, const py::int_& r, const py::int_& degB) {
    return to_py(fano::genus_from_blowup(from_py(kx3), from_py(ky3), from_py(r), from_py(degB)));
  });

  m.def("conic_bundle_ksq_dot_pullback", [](const py::int_& ks_dot_d, const py::int_& delta_dot_d) {
    return to_py(fano::conic_bundle_ksq_dot_pullback(from_py(ks_dot_d), from_py(delta_dot_d)));
  });

  m.def("lattice_index_candidates", [](int mu1, int mu2, const std::string& type1, const std::string& type2) {
    py::set out;
    for (const auto& a : fano::lattice_index_candidates(mu1, mu2, fano::parse_ray_type(type1), fano::parse_ray_type(type2))) {
      out.add(to_py(a));
    }
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = fano::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
