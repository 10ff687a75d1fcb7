// Python bindings. Structured values cross the boundary as JSON strings in
// the same schema the CLI reads and writes; exact rationals stay "p/q"
// strings end to end.
#include <pybind11/pybind11.h>

#include "pluckerlab/json_io.hpp"
#include "pluckerlab/plucker.hpp"
#include "pluckerlab/prematching.hpp"
#include "pluckerlab/svg.hpp"
#include "pluckerlab/tl_algebra.hpp"

namespace py = pybind11;
using namespace pluckerlab;

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

std::pair<IndexTuple, IndexTuple> parse_pair(const std::string& text) {
  const Json j = parse(text);
  return {tuple_from_json(j.at("I")), tuple_from_json(j.at("J"))};
}

std::string ws_layout(const std::string& pair) {
  const auto [I, J] = parse_pair(pair);
  Json out;
  out["ws"] = is_weakly_separated(I, J);
  try {
    out["layout"] = to_json(layout(I, J));
  } catch (const std::invalid_argument&) {
    out["layout"] = nullptr;  // empty symmetric difference
  }
  return dump_json(out);
}

std::string system_json(const std::string& pair, int r) {
  const auto [I, J] = parse_pair(pair);
  return dump_json(to_json(build_system(I, J, r)));
}

std::string evaluate(const std::string& pair, int r, const std::string& matrix) {
  const auto [I, J] = parse_pair(pair);
  const InequalitySystem sys = build_system(I, J, r);
  const auto vals = evaluate_system(sys, embed(matrix_from_json(parse(matrix)), I.shape.m));
  Json out = Json::array();
  for (const Rational& v : vals) out.push_back(rat_str(v));
  return dump_json(out);
}

std::string certify_json(const std::string& pair, int r) {
  const auto [I, J] = parse_pair(pair);
  const InequalitySystem sys = build_system(I, J, r);
  Json out = Json::array();
  for (int l = 1; l <= sys.layout.eta; ++l) out.push_back(to_json(certify(sys, l)));
  return dump_json(out);
}

std::string prematch_json(const std::string& pair) {
  const auto [I, J] = parse_pair(pair);
  return dump_json(to_json(prematch(I, J)));
}

std::string compatible_json(const std::string& pair) {
  const auto [I, J] = parse_pair(pair);
  Json out = Json::array();
  for (const KauffmanDiagram& k : compatible_set(I, J)) out.push_back(to_json(k));
  return dump_json(out);
}

std::string decompose_json(const std::string& pair, const std::string& matrix) {
  const auto [I, J] = parse_pair(pair);
  const ProductDecomposition dec = decompose_product(I, J, matrix_from_json(parse(matrix)));
  Json out;
  out["value"] = rat_str(dec.value);
  out["terms"] = Json::array();
  for (const auto& [k, v] : dec.terms)
    out["terms"].push_back(Json{{"diagram", to_json(k)}, {"value", rat_str(v)}});
  return dump_json(out);
}

std::string verify_json(const std::string& pair, int samples, const std::string& config) {
  const auto [I, J] = parse_pair(pair);
  return dump_json(to_json(verify_theorem_A(I, J, samples, config_from_json(parse(config)))));
}

std::string search_json(const std::string& pair, int budget, const std::string& config) {
  const auto [I, J] = parse_pair(pair);
  const auto w = search_counterexample(I, J, budget, config_from_json(parse(config)));
  return dump_json(w ? to_json(*w) : Json(nullptr));
}

std::string laplace_json(int n, int d, const std::string& matrix) {
  const GeneralizedLaplaceSystem sys = generalized_laplace_system(n, d);
  Json out;
  out["tuples"] = Json::array();
  for (const IndexTuple& t : sys.tuples) out["tuples"].push_back(to_json(t));
  out["certificates"] = Json::array();
  for (int l = 0; l <= n; ++l) out["certificates"].push_back(to_json(certify_laplace(sys, l)));
  if (!matrix.empty()) {
    Json rows = Json::array();
    for (const Rational& v : evaluate_laplace(sys, matrix_from_json(parse(matrix))))
      rows.push_back(rat_str(v));
    out["rows"] = rows;
  }
  return dump_json(out);
}

std::string random_tnn_json(const std::string& config) {
  return dump_json(to_json(random_tnn(config_from_json(parse(config)))));
}

std::string immanant_str(const std::string& diagram, const std::string& matrix) {
  return rat_str(immanant(diagram_from_json(parse(diagram)), matrix_from_json(parse(matrix))));
}

std::string plucker_str(const std::string& tuple, const std::string& matrix) {
  const IndexTuple t = tuple_from_json(parse(tuple));
  return rat_str(plucker(embed(matrix_from_json(parse(matrix)), t.shape.m), t));
}

std::string render_svg(const std::string& pair, const std::string& diagram) {
  const auto [I, J] = parse_pair(pair);
  return render_diagram_svg(diagram_from_json(parse(diagram)), prematch(I, J));
}

}  // namespace

PYBIND11_MODULE(_pluckerlab, m) {
  m.doc() = "Exact oscillating Plucker inequalities over the TNN Grassmannian";
  m.def("ws_layout", &ws_layout, py::arg("pair"),
        "Weak separation flag and symmetric-difference layout for a pair JSON");
  m.def("system", &system_json, py::arg("pair"), py::arg("r"),
        "The r-th oscillating inequality system as JSON");
  m.def("evaluate", &evaluate, py::arg("pair"), py::arg("r"), py::arg("matrix"),
        "Signed partial sums l = 1..eta on an n x m matrix JSON");
  m.def("certify", &certify_json, py::arg("pair"), py::arg("r"),
        "Diagram-coefficient certificates for l = 1..eta");
  m.def("prematch", &prematch_json, py::arg("pair"), "Colored pre-matching JSON");
  m.def("compatible_set", &compatible_json, py::arg("pair"),
        "Compatible Kauffman diagrams for the product of the pair");
  m.def("decompose", &decompose_json, py::arg("pair"), py::arg("matrix"),
        "Exact immanant decomposition of the Plucker product");
  m.def("verify", &verify_json, py::arg("pair"), py::arg("samples"), py::arg("config"),
        "Certify and sample every (l, r) system; returns a report JSON");
  m.def("search", &search_json, py::arg("pair"), py::arg("budget"), py::arg("config"),
        "Counterexample search; null for weakly separated pairs");
  m.def("laplace", &laplace_json, py::arg("n"), py::arg("d"), py::arg("matrix") = std::string(),
        "Generalized Laplace family: tuples, certificates, optional row values");
  m.def("random_tnn", &random_tnn_json, py::arg("config"),
        "Seeded random totally nonnegative matrix JSON");
  m.def("immanant", &immanant_str, py::arg("diagram"), py::arg("matrix"),
        "Exact Temperley-Lieb immanant as a rational string");
  m.def("plucker", &plucker_str, py::arg("tuple"), py::arg("matrix"),
        "Plucker coordinate of the embedded matrix as a rational string");
  m.def("render_svg", &render_svg, py::arg("pair"), py::arg("diagram"),
        "SVG rendering of a diagram over the pair's pre-matching");
}
