#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aquiver/ar.hpp"
#include "aquiver/decompose.hpp"
#include "aquiver/errors.hpp"
#include "aquiver/homological.hpp"
#include "aquiver/io.hpp"
#include "aquiver/tables.hpp"

namespace py = pybind11;
using namespace aquiver;

namespace {

Document load(const std::string& text) { return document_from_json(parse_json(text)); }

Orientation orientation(const std::string& text) { return orientation_from_any(parse_json(text)); }

std::string decompose_json(const std::string& doc) {
  const Document d = load(doc);
  return to_json(d.bars ? *d.bars : decompose(*d.tame)).dump();
}

std::string scramble_json(const std::string& doc, std::uint64_t seed) {
  Document d = load(doc);
  const TameRep v = d.tame ? *d.tame : from_bars(d.orientation, *d.bars, d.field);
  d.tame = scramble(v, seed);
  d.bars.reset();
  return to_json(d).dump();
}

std::size_t hom(const std::string& o, const std::string& i, const std::string& j) {
  return hom_dim(orientation(o), Interval::parse(i), Interval::parse(j));
}

std::size_t ext(const std::string& o, const std::string& v, const std::string& w) {
  return ext_dim(orientation(o), Interval::parse(v), Interval::parse(w));
}

std::string present(const std::string& o, const std::string& i, const std::string& field) {
  const Orientation ori = orientation(o);
  return to_json(proj_presentation(ori, Interval::parse(i), parse_field(field)), ori).dump();
}

std::string table(const std::string& o, bool injective, const std::optional<std::string>& range) {
  std::optional<Interval> r;
  if (range) r = Interval::parse(*range);
  return to_json(indecomposable_table(orientation(o), injective, r)).dump();
}

std::string table_text(const std::string& o, bool injective) {
  return format_table(indecomposable_table(orientation(o), injective));
}

std::string ar(const std::string& o, const std::string& i, bool starting, bool verify) {
  const Orientation ori = orientation(o);
  const Interval iv = Interval::parse(i);
  const ARAnswer a = starting ? ar_starting_at(ori, iv) : ar_ending_at(ori, iv);
  Json j = to_json(a);
  if (verify && a.sequence) j["verified"] = verify_almost_split(*a.sequence, standard_probe_family(ori, *a.sequence));
  return j.dump();
}

bool indecomposable(const std::string& doc) {
  const Document d = load(doc);
  return is_indecomposable(d.tame ? *d.tame : from_bars(d.orientation, *d.bars, d.field));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-string bindings for the aquiver library";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("decompose", &decompose_json, py::arg("document"));
  m.def("scramble", &scramble_json, py::arg("document"), py::arg("seed"));
  m.def("is_indecomposable", &indecomposable, py::arg("document"));
  m.def("hom_dim", &hom, py::arg("orientation"), py::arg("i"), py::arg("j"));
  m.def("ext_dim", &ext, py::arg("orientation"), py::arg("v"), py::arg("w"));
  m.def("present", &present, py::arg("orientation"), py::arg("interval"), py::arg("field") = "Q");
  m.def("projectives", &table, py::arg("orientation"), py::arg("injective") = false,
        py::arg("range") = std::nullopt);
  m.def("projectives_text", &table_text, py::arg("orientation"), py::arg("injective") = false);
  m.def("ar", &ar, py::arg("orientation"), py::arg("interval"), py::arg("starting") = false,
        py::arg("verify") = true);
}
