#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genrank/error.hpp"
#include "genrank/io.hpp"

namespace py = pybind11;
using namespace genrank;

namespace {

PyObject* genrank_error = nullptr;

std::vector<std::pair<std::string, std::int64_t>> named(const LoadedDiagram& d, const std::vector<Subposet>& items,
                                                        std::int64_t (*fn)(const LoadedDiagram&, const Subposet&)) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& i : items) out.emplace_back(d.shape().format(i), fn(d, i));
  return out;
}

py::object distance_value(const Distance& d) {
  if (d.infinite) return py::float_(std::numeric_limits<double>::infinity());
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(d.value.num(), d.value.den());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized rank invariants and persistence diagrams over finite posets";

  // Owned by the module attribute; args are (code, message).
  genrank_error = py::exception<Error>(m, "GenrankError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(genrank_error, py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
    }
  });

  py::class_<LoadedDiagram>(m, "Diagram")
      .def_property_readonly("is_set", &LoadedDiagram::is_set)
      .def_property_readonly("kind", [](const LoadedDiagram& d) { return d.is_set() ? "set" : "vec"; })
      .def("intervals",
           [](const LoadedDiagram& d, std::size_t cap) {
             std::vector<std::string> out;
             for (const auto& i : carriers(d, std::nullopt, cap)) out.push_back(d.shape().format(i));
             return out;
           },
           py::arg("cap") = 0)
      .def("validate",
           [](const LoadedDiagram& d) -> py::object {
             if (d.is_set()) return py::none();
             FunctorialityReport r = validate_functoriality(d.vec());
             if (r.ok) return py::none();
             const Poset& p = d.shape().poset();
             return py::make_tuple(p.label(r.violation->first), p.label(r.violation->second));
           },
           "None when functorial, otherwise a pair of elements with disagreeing cover paths")
      .def("rank", [](const LoadedDiagram& d, const std::string& i) { return rank_of(d, d.shape().parse_interval(i)); })
      .def("diagram",
           [](const LoadedDiagram& d, const std::string& i) { return diagram_of(d, d.shape().parse_interval(i)); })
      .def("diagram_mobius",
           [](const LoadedDiagram& d, const std::string& i) {
             return diagram_via_mobius_of(d, d.shape().parse_interval(i));
           })
      .def("ranks", [](const LoadedDiagram& d, std::size_t cap) { return named(d, carriers(d, std::nullopt, cap), rank_of); },
           py::arg("cap") = 0)
      .def("diagrams",
           [](const LoadedDiagram& d, std::size_t cap) { return named(d, carriers(d, std::nullopt, cap), diagram_of); },
           py::arg("cap") = 0)
      .def("barcode",
           [](const LoadedDiagram& d) {
             std::vector<std::pair<std::string, std::int64_t>> out;
             for (const auto& [i, mult] : barcode_of(d)) out.emplace_back(i.to_string(), mult);
             return out;
           })
      .def("full", [](const LoadedDiagram& d, const std::string& i) {
        return count_full(d.set(), d.shape().parse_interval(i));
      })
      .def("untwisted",
           [](const LoadedDiagram& d) {
             UntwistedReport r = is_untwisted(d.set());
             std::optional<std::string> w;
             if (r.witness) w = d.shape().format(*r.witness);
             return std::make_pair(r.untwisted, w);
           })
      .def("dot", [](const LoadedDiagram& d) { return reeb_dot(d.set()); })
      .def("to_json", [](const LoadedDiagram& d) { return diagram_to_json(d).dump(); });

  m.def("loads", [](const std::string& text) { return parse_diagram(Json::parse(text)); },
        "Parse a diagram from its JSON text");
  m.def("load", &load_diagram, "Read a diagram from a JSON file");
  m.def("bottleneck",
        [](const std::string& a, const std::string& b) {
          return distance_value(bottleneck(points_from_json(Json::parse(a)), points_from_json(Json::parse(b))));
        },
        "Bottleneck distance between two diagrams or point lists given as JSON text; a Fraction or inf");
  m.def("matrix_rank",
        [](const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
          return rank(Matrix::from_rows(rows, p));
        },
        py::arg("rows"), py::arg("p") = 2);
}
