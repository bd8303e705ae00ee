#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dyck/catalan.hpp"
#include "dyck/errors.hpp"
#include "dyck/oracle.hpp"
#include "dyck/triangle.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const dyck::BigNat& v) {
  const std::string s = v.to_string();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<dyck::BigNat>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

dyck::NodeCoord node(std::size_t i, std::size_t j) { return {i, j}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dyck triangle and Catalan sum-of-squares decomposition";

  py::register_exception<dyck::CapExceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<dyck::OutOfTable>(m, "OutOfTable", PyExc_IndexError);
  py::register_exception<dyck::InvalidNode>(m, "InvalidNode", PyExc_ValueError);
  py::register_exception<dyck::InvalidWord>(m, "InvalidWord", PyExc_ValueError);
  py::register_exception<dyck::OutOfRange>(m, "OutOfRange", PyExc_IndexError);

  m.def("catalan", [](std::size_t n) { return to_py(dyck::catalan(n)); }, py::arg("n"));
  m.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(dyck::binomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("ballot", [](std::size_t n, std::size_t j) { return to_py(dyck::ballot(n, j)); },
        py::arg("n"), py::arg("j"));
  m.def("column_term", [](std::size_t n, std::size_t k) { return to_py(dyck::column_term(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def(
      "decompose",
      [](std::size_t n) {
        const auto d = dyck::decompose(n);
        py::dict out;
        out["n"] = n;
        out["catalan"] = to_py(d.catalan);
        out["terms"] = to_py(d.terms);
        out["squares"] = to_py(d.squares());
        return out;
      },
      py::arg("n"));
  m.def(
      "ij_to_nk",
      [](std::size_t i, std::size_t j) {
        const auto nk = dyck::ij_to_nk(node(i, j));
        return py::make_tuple(nk.n, nk.k);
      },
      py::arg("i"), py::arg("j"));
  m.def(
      "nk_to_ij",
      [](std::size_t n, std::size_t k) {
        const auto x = dyck::nk_to_ij(n, k);
        return py::make_tuple(x.i, x.j);
      },
      py::arg("n"), py::arg("k"));

  m.def("validate", [](const std::string& s) { return dyck::validate(s); }, py::arg("symbols"));
  m.def("validate_by_positions", [](const std::string& s) { return dyck::validate_by_positions(s); },
        py::arg("symbols"));
  m.def(
      "enumerate",
      [](std::size_t n) {
        std::vector<std::string> out;
        for (const auto& w : dyck::enumerate(n)) out.push_back(w);
        return out;
      },
      py::arg("n"));
  m.def("unbalance_profile", [](const std::string& s) { return dyck::unbalance_profile(s); },
        py::arg("symbols"));
  m.def("midpoint_histogram", [](std::size_t n) { return dyck::midpoint_histogram(n); },
        py::arg("n"));

  py::class_<dyck::TriangleTable>(m, "Triangle")
      .def(py::init([](std::size_t i_max) { return dyck::build(i_max); }), py::arg("i_max"))
      .def_property_readonly("i_max", &dyck::TriangleTable::i_max)
      .def(
          "dynamics",
          [](const dyck::TriangleTable& t, std::size_t i, std::size_t j) {
            return to_py(dyck::dynamics(t, node(i, j)));
          },
          py::arg("i"), py::arg("j"))
      .def(
          "reverse_dynamics",
          [](const dyck::TriangleTable& t, std::size_t n, std::size_t i, std::size_t j) {
            return to_py(dyck::reverse_dynamics(t, n, node(i, j)));
          },
          py::arg("n"), py::arg("i"), py::arg("j"))
      .def(
          "paths_through",
          [](const dyck::TriangleTable& t, std::size_t n, std::size_t i, std::size_t j) {
            return to_py(dyck::paths_through(t, n, node(i, j)));
          },
          py::arg("n"), py::arg("i"), py::arg("j"))
      .def(
          "column",
          [](const dyck::TriangleTable& t, std::size_t n) { return to_py(dyck::column(t, n)); },
          py::arg("n"));
}
