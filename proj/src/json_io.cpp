#include "pluckerlab/json_io.hpp"

namespace pluckerlab {

Json to_json(const IndexTuple& t) {
  return Json{{"m", t.shape.m}, {"n", t.shape.n}, {"entries", t.entries}};
}

IndexTuple tuple_from_json(const Json& j) {
  const GrassmannShape shape(j.at("m").get<int>(), j.at("n").get<int>());
  return IndexTuple(shape, j.at("entries").get<std::vector<int>>());
}

Json to_json(const SymDiffLayout& lay) {
  return Json{{"eta", lay.eta}, {"i_seq", lay.i_seq}, {"j_seq", lay.j_seq}};
}

Json to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      entries.push_back(
          Json::array({m(i, j).get_num().get_str(), m(i, j).get_den().get_str()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RationalMatrix matrix_from_json(const Json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix json: entry count mismatch");
  RationalMatrix m(rows, cols);
  int idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) {
      const Json& e = entries[idx++];
      Rational q(Integer(e.at(0).get<std::string>()), Integer(e.at(1).get<std::string>()));
      if (q.get_den() == 0) throw std::invalid_argument("matrix json: zero denominator");
      q.canonicalize();
      m(i, c) = q;
    }
  return m;
}

Json to_json(const KauffmanDiagram& k) {
  Json edges = Json::array();
  for (const auto& [a, b] : k.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"s", k.s()}, {"edges", edges}};
}

KauffmanDiagram diagram_from_json(const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return KauffmanDiagram::from_edges(j.at("s").get<int>(), edges);
}

std::string diagram_key(const KauffmanDiagram& k) {
  std::string out;
  for (const auto& [a, b] : k.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + '-' + std::to_string(b);
  }
  return out;
}

Json to_json(const Certificate& c) {
  Json coeffs = Json::object();
  for (const auto& [k, v] : c.coefficients) coeffs[diagram_key(k)] = v.get_str();
  return Json{{"l", c.l}, {"certified", c.certified()}, {"coefficients", coeffs}};
}

Json to_json(const ViolationWitness& w) {
  return Json{{"l", w.l}, {"r", w.r}, {"value", rat_str(w.value)}, {"X", to_json(w.X)}};
}

Json to_json(const Report& r) {
  Json results = Json::array();
  for (const SystemResult& res : r.results) {
    Json coeffs = Json::object();
    for (const auto& [k, v] : res.coefficients) coeffs[diagram_key(k)] = v.get_str();
    Json row{{"l", res.l},
             {"r", res.r},
             {"certified", res.certified},
             {"coefficients", coeffs},
             {"min_value", rat_str(res.min_value)}};
    row["witness"] = res.witness ? to_json(*res.witness) : Json();
    results.push_back(std::move(row));
  }
  return Json{{"pair", Json{{"I", to_json(r.I)}, {"J", to_json(r.J)}}},
              {"ws", r.ws},
              {"results", results}};
}

Json to_json(const InequalitySystem& sys) {
  Json terms = Json::array();
  for (size_t k = 0; k < sys.terms.size(); ++k) {
    const TermSpec& t = sys.terms[k];
    terms.push_back(Json{{"k", static_cast<int>(k) + 1},
                         {"I_kr", t.Ikr.entries},
                         {"J_kr", t.Jkr.entries},
                         {"sign", sys.signs[k]},
                         {"subtract_base", t.subtract_base}});
  }
  return Json{{"I", to_json(sys.I)},
              {"J", to_json(sys.J)},
              {"layout", to_json(sys.layout)},
              {"r", sys.r},
              {"terms", terms}};
}

Json to_json(const ColoredPrematching& pm) {
  Json colors = Json::array();
  for (VertexColor c : pm.color)
    colors.push_back(c == VertexColor::white ? "white"
                                             : (c == VertexColor::black ? "black" : "edge"));
  Json edges = Json::array();
  for (const auto& [a, b] : pm.mandatory_edges) edges.push_back(Json::array({a, b}));
  return Json{{"s", pm.s}, {"colors", colors}, {"mandatory_edges", edges}};
}

Json to_json(const GeneratorConfig& c) {
  return Json{{"seed", c.seed},
              {"n", c.n},
              {"m", c.m},
              {"bound", rat_str(c.parameter_bound)},
              {"density", rat_str(c.density)}};
}

GeneratorConfig config_from_json(const Json& j) {
  GeneratorConfig c;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.n = j.at("n").get<int>();
  c.m = j.at("m").get<int>();
  if (j.contains("bound")) c.parameter_bound = rat_parse(j.at("bound").get<std::string>());
  if (j.contains("density")) c.density = rat_parse(j.at("density").get<std::string>());
  c.validate();
  return c;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pluckerlab
