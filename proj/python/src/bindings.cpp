#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fstruct/audit.hpp"
#include "fstruct/cli.hpp"
#include "fstruct/errors.hpp"
#include "fstruct/generator.hpp"
#include "fstruct/integrability.hpp"
#include "fstruct/manifest.hpp"
#include "fstruct/nijenhuis.hpp"

namespace py = pybind11;
using namespace fstruct;

namespace {

LoadedStructure load_text(const std::string& manifest_json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(manifest_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return load(manifest_from_json(j));
}

std::size_t var_index(const Chart& chart, const std::string& name) {
  if (auto i = chart.index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact integrability checks for F-structures";

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  m.def("example_manifest", [](int id) { return to_json(builtin_example(id)).dump(); }, py::arg("id"),
        "Manifest JSON of a built-in example (1..4).");

  m.def("canonical_manifest", [](const std::string& text) { return to_json(canonical_manifest(load_text(text))).dump(); },
        py::arg("manifest"), "Manifest with every entry re-printed in canonical form.");

  m.def(
      "report",
      [](const std::string& text) {
        auto ls = load_text(text);
        return report_json(ls).dump();
      },
      py::arg("manifest"), "Full integrability report as a JSON string.");

  m.def(
      "nijenhuis",
      [](const std::string& text, const std::string& a, const std::string& b) {
        auto ls = load_text(text);
        const auto& s = ls.structure;
        VectorField v = nijenhuis_apply(s.F, VectorField::unit(s.dim(), var_index(s.chart, a)),
                                        VectorField::unit(s.dim(), var_index(s.chart, b)));
        return to_string(v, s.chart.vars());
      },
      py::arg("manifest"), py::arg("a"), py::arg("b"), "N_F on the coordinate fields of two variables.");

  m.def(
      "classify",
      [](const std::string& alpha, const std::string& beta, int K) {
        auto c = classify(parse_rational(alpha), parse_rational(beta), K);
        return py::make_tuple(c.label, c.case_number, c.matches);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("K"), "(label, first case number or 0, all matching cases).");

  m.def(
      "generate",
      [](std::size_t n, int K, const std::string& alpha, const std::string& beta, std::size_t kernel_dim,
         const std::string& conjugation, std::uint64_t seed) {
        GeneratorSpec spec;
        spec.n = n;
        spec.K = K;
        spec.alpha = parse_rational(alpha);
        spec.beta = parse_rational(beta);
        spec.kernel_dim = kernel_dim;
        spec.conjugation = parse_conjugation(conjugation);
        spec.seed = seed;
        auto g = generate(spec);
        return to_json(canonical_manifest(LoadedStructure{g.structure, g.fhat})).dump();
      },
      py::arg("n"), py::arg("K"), py::arg("alpha"), py::arg("beta"), py::arg("kernel_dim") = 0,
      py::arg("conjugation") = "none", py::arg("seed") = 0, "Manifest JSON of a generated structure.");

  m.def(
      "audit_failures",
      [](const std::string& text) {
        auto ls = load_text(text);
        return audit(ls.structure, ls.fhat).failures();
      },
      py::arg("manifest"), "Identity and consistency failures; empty when everything holds.");
}
