#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pluckerlab/inequality.hpp"
#include "pluckerlab/json_io.hpp"
#include "pluckerlab/plucker.hpp"
#include "pluckerlab/prematching.hpp"
#include "pluckerlab/svg.hpp"
#include "pluckerlab/tl_algebra.hpp"

namespace {

using namespace pluckerlab;

// Exit codes: 0 holds/success, 1 violation found, 2 usage error, 3 budget
// exhausted without a witness.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::vector<int> parse_tuple(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::stringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(std::stoi(token));
  return out;
}

struct PairArgs {
  int m = 0, n = 0;
  std::string I_text, J_text;

  IndexTuple I() const { return IndexTuple(GrassmannShape(m, n), parse_tuple(I_text)); }
  IndexTuple J() const { return IndexTuple(GrassmannShape(m, n), parse_tuple(J_text)); }
};

void add_pair_flags(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("--m", args.m, "minor size m")->required();
  cmd->add_option("--n", args.n, "co-size n (ambient is m+n)")->required();
  cmd->add_option("--I", args.I_text, "comma-separated tuple I")->required();
  cmd->add_option("--J", args.J_text, "comma-separated tuple J")->required();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output path: " + out_path);
  f << payload;
}

RationalMatrix load_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open matrix file: " + path);
  Json j;
  f >> j;
  return matrix_from_json(j);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact tools for oscillating determinantal inequalities over the TNN Grassmannian"};
  app.require_subcommand(1);

  PairArgs pair;
  std::string out_path, format = "json", matrix_path, diagram_path;
  int r = 1, l = -1, samples = 20, budget = 64, laplace_n = 0, laplace_d = 0;
  std::uint64_t seed = 1;
  bool use_random = false;

  auto* ws_cmd = app.add_subcommand("ws", "weak separation test");
  add_pair_flags(ws_cmd, pair);
  ws_cmd->add_option("--out", out_path);
  ws_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* layout_cmd = app.add_subcommand("layout", "clockwise symmetric-difference layout");
  add_pair_flags(layout_cmd, pair);
  layout_cmd->add_option("--out", out_path);

  auto* system_cmd = app.add_subcommand("system", "oscillating system terms for fixed r");
  add_pair_flags(system_cmd, pair);
  system_cmd->add_option("--r", r, "exchange position r in [1, eta]")->required();
  system_cmd->add_option("--out", out_path);

  auto* decompose_cmd = app.add_subcommand("decompose", "TL-immanant product decomposition");
  add_pair_flags(decompose_cmd, pair);
  decompose_cmd->add_option("--matrix", matrix_path, "matrix JSON path (n x m)");
  decompose_cmd->add_flag("--random", use_random, "use a seeded random TNN matrix");
  decompose_cmd->add_option("--seed", seed);
  decompose_cmd->add_option("--out", out_path);

  auto* certify_cmd = app.add_subcommand("certify", "diagram-coefficient certificates");
  add_pair_flags(certify_cmd, pair);
  certify_cmd->add_option("--r", r)->required();
  certify_cmd->add_option("--l", l, "partial-sum length (default: all)");
  certify_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "certify + sample every (l, r)");
  add_pair_flags(verify_cmd, pair);
  verify_cmd->add_option("--samples", samples);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--out", out_path);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* search_cmd = app.add_subcommand("search", "counterexample witness search");
  add_pair_flags(search_cmd, pair);
  search_cmd->add_option("--budget", budget, "seed-ladder length");
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--out", out_path);

  auto* laplace_cmd = app.add_subcommand("laplace", "generalized Laplace family");
  laplace_cmd->add_option("--n", laplace_n)->required();
  laplace_cmd->add_option("--d", laplace_d)->required();
  laplace_cmd->add_option("--samples", samples);
  laplace_cmd->add_option("--seed", seed);
  laplace_cmd->add_option("--out", out_path);

  auto* gen_cmd = app.add_subcommand("gen", "seeded random TNN matrix");
  int gen_n = 3, gen_m = 3;
  std::string bound = "3", density = "1/2", config_path;
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--m", gen_m);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--bound", bound);
  gen_cmd->add_option("--density", density);
  gen_cmd->add_option("--config", config_path, "generator config JSON path");
  gen_cmd->add_option("--out", out_path);

  auto* render_cmd = app.add_subcommand("render", "SVG diagram rendering");
  render_cmd->add_option("--diagram", diagram_path, "diagram JSON path");
  render_cmd->add_option("--m", pair.m);
  render_cmd->add_option("--n", pair.n);
  render_cmd->add_option("--I", pair.I_text);
  render_cmd->add_option("--J", pair.J_text);
  render_cmd->add_option("--out", out_path, "output file, or prefix for batch rendering");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (ws_cmd->parsed()) {
    const IndexTuple I = pair.I(), J = pair.J();
    const bool ws = is_weakly_separated(I, J);
    Json out{{"ws", ws}};
    try {
      out["layout"] = to_json(layout(I, J));
    } catch (const std::invalid_argument&) {
      out["layout"] = Json();
    }
    if (format == "text")
      write_output(out_path, std::string(ws ? "weakly separated" : "not weakly separated") + "\n");
    else
      write_output(out_path, dump_json(out));
    return kOk;
  }

  if (layout_cmd->parsed()) {
    write_output(out_path, dump_json(to_json(layout(pair.I(), pair.J()))));
    return kOk;
  }

  if (system_cmd->parsed()) {
    write_output(out_path, dump_json(to_json(build_system(pair.I(), pair.J(), r))));
    return kOk;
  }

  if (decompose_cmd->parsed()) {
    const IndexTuple I = pair.I(), J = pair.J();
    RationalMatrix X;
    if (!matrix_path.empty())
      X = load_matrix(matrix_path);
    else if (use_random) {
      GeneratorConfig cfg;
      cfg.seed = seed;
      cfg.n = I.shape.n;
      cfg.m = I.shape.m;
      X = random_tnn(cfg);
    } else
      throw CLI::ValidationError("decompose", "need --matrix or --random");
    const ProductDecomposition dec = decompose_product(I, J, X);
    Json terms = Json::array();
    for (const auto& [k, v] : dec.terms)
      terms.push_back(Json{{"diagram", to_json(k)}, {"value", rat_str(v)}});
    write_output(out_path, dump_json(Json{{"value", rat_str(dec.value)},
                                          {"terms", terms},
                                          {"matrix", to_json(X)}}));
    return kOk;
  }

  if (certify_cmd->parsed()) {
    const InequalitySystem sys = build_system(pair.I(), pair.J(), r);
    Json results = Json::array();
    bool all_certified = true;
    const int lo = (l == -1) ? 1 : l;
    const int hi = (l == -1) ? sys.layout.eta : l;
    for (int li = lo; li <= hi; ++li) {
      const Certificate c = certify(sys, li);
      all_certified = all_certified && c.certified();
      Json row = to_json(c);
      row["r"] = r;
      results.push_back(std::move(row));
    }
    write_output(out_path, dump_json(Json{{"results", results}}));
    return all_certified ? kOk : kViolation;
  }

  if (verify_cmd->parsed()) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    const Report report = verify_theorem_A(pair.I(), pair.J(), samples, cfg);
    bool clean = true;
    for (const SystemResult& res : report.results)
      clean = clean && res.certified && !res.witness;
    if (format == "text") {
      std::ostringstream text;
      text << (report.ws ? "weakly separated" : "not weakly separated") << "\n";
      for (const SystemResult& res : report.results)
        text << "l=" << res.l << " r=" << res.r
             << (res.certified ? " certified" : " NOT certified")
             << " min=" << rat_str(res.min_value) << "\n";
      write_output(out_path, text.str());
    } else
      write_output(out_path, dump_json(to_json(report)));
    return clean ? kOk : kViolation;
  }

  if (search_cmd->parsed()) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    try {
      const auto witness = search_counterexample(pair.I(), pair.J(), budget, cfg);
      if (!witness) {
        write_output(out_path, dump_json(Json{{"witness", Json()}, {"ws", true}}));
        return kOk;
      }
      write_output(out_path, dump_json(Json{{"witness", to_json(*witness)}, {"ws", false}}));
      return kViolation;
    } catch (const BudgetExhausted& e) {
      std::cerr << e.what() << "\n";
      return kBudget;
    }
  }

  if (laplace_cmd->parsed()) {
    const GeneralizedLaplaceSystem sys = generalized_laplace_system(laplace_n, laplace_d);
    Json rows = Json::array();
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.n = laplace_n;
    cfg.m = laplace_n;
    std::vector<std::vector<Rational>> sampled;
    for (int t = 0; t < samples; ++t) {
      GeneratorConfig c = cfg;
      c.seed = seed + static_cast<std::uint64_t>(t);
      sampled.push_back(evaluate_laplace(sys, random_tnn(c)));
    }
    bool clean = true;
    for (int li = 0; li <= laplace_n; ++li) {
      const Certificate c = certify_laplace(sys, li);
      Json row = to_json(c);
      row["tuple"] = sys.tuples[li].entries;
      Rational min_v = 0;
      for (int t = 0; t < samples; ++t)
        if (t == 0 || sampled[t][li] < min_v) min_v = sampled[t][li];
      row["min_value"] = rat_str(min_v);
      clean = clean && c.certified() && min_v >= 0;
      rows.push_back(std::move(row));
    }
    write_output(out_path, dump_json(Json{{"n", laplace_n}, {"d", laplace_d}, {"rows", rows}}));
    return clean ? kOk : kViolation;
  }

  if (gen_cmd->parsed()) {
    GeneratorConfig cfg;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw std::runtime_error("cannot open config file: " + config_path);
      Json j;
      f >> j;
      cfg = config_from_json(j);
    } else {
      cfg.seed = seed;
      cfg.n = gen_n;
      cfg.m = gen_m;
      cfg.parameter_bound = rat_parse(bound);
      cfg.density = rat_parse(density);
      cfg.validate();
    }
    write_output(out_path, dump_json(Json{{"config", to_json(cfg)},
                                          {"matrix", to_json(random_tnn(cfg))}}));
    return kOk;
  }

  if (render_cmd->parsed()) {
    if (!diagram_path.empty()) {
      std::ifstream f(diagram_path);
      if (!f) throw std::runtime_error("cannot open diagram file: " + diagram_path);
      Json j;
      f >> j;
      write_output(out_path, render_diagram_svg(diagram_from_json(j)));
      return kOk;
    }
    if (pair.m == 0 || pair.I_text.empty() || pair.J_text.empty())
      throw CLI::ValidationError("render", "need --diagram or a full --m/--n/--I/--J pair");
    const IndexTuple I = pair.I(), J = pair.J();
    const ColoredPrematching pm = prematch(I, J);
    const auto phi = compatible_set(I, J);
    if (out_path.empty()) {
      write_output("", render_prematching_svg(pm));
      return kOk;
    }
    write_output(out_path + "_prematch.svg", render_prematching_svg(pm));
    for (size_t i = 0; i < phi.size(); ++i) {
      std::ostringstream name;
      name << out_path << "_K" << i << ".svg";
      write_output(name.str(), render_diagram_svg(phi[i], pm));
    }
    return kOk;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
