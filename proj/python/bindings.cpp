#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtoledo/cli.hpp"
#include "qtoledo/report.hpp"
#include "qtoledo/selftest.hpp"

#include <sstream>

namespace py = pybind11;
using namespace qtoledo;

namespace {

Vec to_vec(const std::vector<std::string> &parts) {
  Vec v;
  for (const auto &p : parts) v.push_back(FieldElem::parse(p));
  return v;
}

EmbeddingKind embedding(const std::string &name) {
  const auto k = parse_embedding(name);
  if (!k) throw std::invalid_argument("unknown embedding \"" + name + "\"");
  return *k;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Toledo constants and period-domain lifting checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  py::class_<FieldElem>(m, "FieldElem")
      .def(py::init<>())
      .def(py::init([](long v) { return FieldElem(v); }))
      .def(py::init([](const std::string &s) { return FieldElem::parse(s); }))
      .def_static("i", &FieldElem::i)
      .def_static("sqrt2", &FieldElem::sqrt2)
      .def("conj", &FieldElem::conj)
      .def("inverse", &FieldElem::inverse)
      .def("is_zero", &FieldElem::is_zero)
      .def("is_real", &FieldElem::is_real)
      .def("coords", [](const FieldElem &x) {
        return std::vector<std::string>{x.a().get_str(), x.b().get_str(), x.c().get_str(), x.d().get_str()};
      }, "Coordinates (a, b, c, d) of a + b i + c sqrt2 + d i sqrt2 as exact strings.")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &FieldElem::str)
      .def("__repr__", [](const FieldElem &x) { return "FieldElem('" + x.str() + "')"; });

  m.def("pullback_json", [](const std::string &name, std::size_t n) {
    return to_json(pullback_constant(make_embedding(embedding(name), n))).dump();
  }, py::arg("embedding"), py::arg("n") = 2);

  m.def("classify_json", [](const std::string &name, std::size_t n) {
    return to_json(classify_linearity(make_embedding(embedding(name), n))).dump();
  }, py::arg("embedding"), py::arg("n") = 2);

  m.def("twistor_check_json", [](const std::vector<std::string> &a) {
    return to_json("twistor_nonlift", twistor_nonlift_check(to_vec(a))).dump();
  }, py::arg("a"));

  m.def("holomorphy_check_json", [](const std::vector<std::string> &a) {
    return to_json("holomorphy_u3u1u2", holomorphy_check_u3u1u2(to_vec(a))).dump();
  }, py::arg("a"));

  m.def("horizontality_json", [](const std::vector<std::string> &v0, const std::vector<std::string> &w) {
    const Vec a = to_vec(v0), b = to_vec(w);
    return to_json(horizontality_check(a, b), a, b).dump();
  }, py::arg("v0"), py::arg("w"));

  m.def("period_triple_json", [](const std::vector<std::string> &v) {
    return to_json(period_triple(to_vec(v))).dump();
  }, py::arg("v"));

  m.def("selftest", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto &r : run_selftest()) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");

#ifdef VERSION_INFO
#define QT_STR(x) #x
#define QT_XSTR(x) QT_STR(x)
  m.attr("__version__") = QT_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
