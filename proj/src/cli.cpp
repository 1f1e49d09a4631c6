#include "p5col/cli.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "p5col/errors.hpp"
#include "p5col/generate.hpp"
#include "p5col/graph_io.hpp"
#include "p5col/matching.hpp"
#include "p5col/oracle.hpp"
#include "p5col/serialize.hpp"
#include "p5col/verify.hpp"

namespace p5col {

namespace {

struct RunConfig {
  std::string subcommand;
  std::string action;  // verify/oracle target
  std::vector<std::string> inputs;
  std::string format;  // empty: guess from the extension
  std::string class_name = "p5-cop5";
  int p = 0;
  std::string weights_path;
  std::string coloring_path;
  std::string kind = "cliquesep";
  std::uint64_t seed = 1;
  int n = 10;
  int count = 1;
  double density = 0.3;
  int samples = 200;
  int n_max = 10;
  bool weighted = false;
  Limits limits;
  std::string output;
  std::string output_dir;
  std::string report = "json";
  bool timings = false;
  bool json_errors = false;
  int jobs = 1;
};

struct Failure {
  int code;
  Json detail;
};

Failure describe_failure() {
  try {
    throw;
  } catch (const ClassViolation& e) {
    return {kExitNotInClass,
            {{"error", "not_in_class"}, {"message", e.what()}, {"witness", to_json(e.witness())}}};
  } catch (const ParseError& e) {
    return {kExitParse, {{"error", "parse"}, {"message", e.what()}, {"line", e.line()}}};
  } catch (const CutoffExceeded& e) {
    return {kExitCutoff,
            {{"error", "cutoff"}, {"message", e.what()}, {"size", e.size()}, {"limit", e.limit()}}};
  } catch (const std::exception& e) {
    return {kExitUsage, {{"error", "failure"}, {"message", e.what()}}};
  }
}

GraphClass class_of(const RunConfig& cfg) {
  if (cfg.class_name == "p5-cop5") {
    if (cfg.p != 0) throw std::invalid_argument("--p only applies to --class p5-kpe");
    return GraphClass::p5_cop5();
  }
  if (cfg.class_name == "p5-kpe") {
    if (cfg.p == 0) throw std::invalid_argument("--class p5-kpe needs --p");
    return GraphClass::p5_kpe(cfg.p);
  }
  throw std::invalid_argument("unknown class '" + cfg.class_name + "'");
}

GraphFormat format_for(const RunConfig& cfg, const std::string& path) {
  return cfg.format.empty() ? format_from_path(path) : parse_format_name(cfg.format);
}

Graph load_graph(const RunConfig& cfg, const std::string& path) {
  if (path == "-") return parse_graph(std::cin, format_for(cfg, path));
  return read_graph_file(path, format_for(cfg, path));
}

// Writes to --output when given, else to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw std::runtime_error("cannot write '" + cfg.output + "'");
  file << text;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string text_report(const SolveReport& r, bool timings) {
  std::ostringstream s;
  s << "class: " << r.graph_class.describe() << "\n";
  s << "n: " << r.n << "\nchi: " << r.chi << "\n";
  for (const auto& route : r.routes) {
    s << "route: " << to_string(route.route) << " chi=" << route.chi << " vertices=";
    for (std::size_t i = 0; i < route.vertices.size(); ++i) {
      s << (i ? "," : "") << route.vertices[i];
    }
    s << "\n";
  }
  s << "coloring:";
  for (std::size_t v = 0; v < r.coloring.colors.size(); ++v) {
    s << ' ' << v << ':';
    const auto& set = r.coloring.colors[v];
    for (std::size_t i = 0; i < set.size(); ++i) s << (i ? "," : "") << set[i];
  }
  s << "\n";
  if (timings) s << "ms: " << r.ms << "\n";
  return s.str();
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GraphClass cls = class_of(cfg);
  if (cfg.inputs.empty()) throw std::invalid_argument("solve needs --input");
  if (!cfg.weights_path.empty() && cfg.inputs.size() != 1) {
    throw std::invalid_argument("--weights needs exactly one input");
  }
  std::vector<std::string> texts(cfg.inputs.size());
  std::vector<Failure> failures(cfg.inputs.size(), Failure{kExitOk, nullptr});

  auto run_one = [&](std::size_t i) {
    try {
      Graph g = load_graph(cfg, cfg.inputs[i]);
      std::optional<VertexWeights> w;
      if (!cfg.weights_path.empty()) w = read_weights_file(cfg.weights_path, g.n());
      SolveReport r = solve(g, cls, w, cfg.limits);
      texts[i] = cfg.report == "text" ? text_report(r, cfg.timings)
                                      : to_json(r, cfg.timings).dump(2);
    } catch (...) {
      failures[i] = describe_failure();
      failures[i].detail["input"] = cfg.inputs[i];
    }
  };

  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(cfg.inputs.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cfg.inputs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cfg.inputs.size(); i = next++) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  int code = kExitOk;
  for (const auto& f : failures) {
    if (f.code != kExitOk) {
      code = f.code;
      break;
    }
  }
  const bool batch = cfg.inputs.size() > 1;
  std::string body;
  if (cfg.report == "text") {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (batch) body += "== " + cfg.inputs[i] + "\n";
      if (failures[i].code == kExitOk) body += texts[i];
    }
  } else if (batch) {
    body = "[\n";
    for (std::size_t i = 0; i < texts.size(); ++i) {
      body += failures[i].code == kExitOk ? texts[i] : failures[i].detail.dump(2);
      body += i + 1 < texts.size() ? ",\n" : "\n";
    }
    body += "]\n";
  } else if (failures[0].code == kExitOk) {
    body = texts[0] + "\n";
  }
  if (!body.empty()) emit(cfg, out, body);
  for (const auto& f : failures) {
    if (f.code == kExitOk) continue;
    if (cfg.json_errors) {
      if (!batch || cfg.report == "text") err << f.detail.dump() << "\n";
    } else {
      err << "error: " << f.detail["input"].get<std::string>() << ": "
          << f.detail["message"].get<std::string>() << "\n";
    }
  }
  return code;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw std::invalid_argument("decompose needs one --input");
  Graph g = load_graph(cfg, cfg.inputs[0]);
  Json j;
  if (cfg.kind == "cliquesep") {
    j = to_json(build_cdecomp_tree(g));
  } else if (cfg.kind == "modular") {
    j = g.n() == 0 ? Json(nullptr) : to_json(md_tree(g));
  } else {
    throw std::invalid_argument("unknown --kind '" + cfg.kind + "'");
  }
  emit(cfg, out, render(j));
  return kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const GraphClass cls = class_of(cfg);
  const GraphFormat format = cfg.format.empty() ? GraphFormat::Dimacs : parse_format_name(cfg.format);
  if (cfg.count > 1 && cfg.output_dir.empty()) {
    throw std::invalid_argument("--count above 1 needs --output-dir");
  }
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t instance_seed = rng();
    Graph g = cls.kind == GraphClass::Kind::P5CoP5
                  ? gen_p5_cop5(cfg.n, instance_seed)
                  : gen_p5_kpe(cfg.n, cls.p, instance_seed, cfg.density).graph;
    const std::string text = format_graph(g, format);
    if (cfg.output_dir.empty()) {
      emit(cfg, out, text);
      continue;
    }
    std::filesystem::create_directories(cfg.output_dir);
    std::ostringstream name;
    name << cls.name() << (cls.p ? std::to_string(cls.p) : "") << "_n" << cfg.n << "_"
         << std::setw(4) << std::setfill('0') << i
         << (format == GraphFormat::Dimacs ? ".col" : ".txt");
    const auto path = std::filesystem::path(cfg.output_dir) / name.str();
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
    file << text;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Json j;
  bool ok = true;
  std::string summary;
  if (cfg.action == "lemma5") {
    auto r = verify_lemma5(cfg.n_max, cfg.limits);
    j = to_json(r);
    ok = r.ok();
  } else if (cfg.action == "lemma4") {
    auto r = verify_lemma4(cfg.p == 0 ? 4 : cfg.p, cfg.samples, cfg.n_max, cfg.seed, cfg.limits);
    j = to_json(r);
    ok = r.ok();
  } else if (cfg.action == "gyarfas") {
    auto r = verify_gyarfas(cfg.samples, cfg.n_max, cfg.seed, cfg.limits);
    j = to_json(r);
    ok = r.ok();
  } else if (cfg.action == "oracle") {
    auto r = cross_check_pipeline(class_of(cfg), cfg.samples, cfg.n_max, cfg.seed, cfg.weighted,
                                  cfg.limits);
    j = to_json(r);
    ok = r.ok();
  } else {
    throw std::invalid_argument("unknown verify target '" + cfg.action + "'");
  }
  if (cfg.report == "text") {
    std::ostringstream s;
    s << cfg.action << ": " << (ok ? "ok" : "FAILED") << "\n";
    for (const auto& [key, value] : j.items()) {
      if (key != "check" && key != "ok") s << "  " << key << ": " << value.dump() << "\n";
    }
    emit(cfg, out, s.str());
  } else {
    emit(cfg, out, render(j));
  }
  return ok ? kExitOk : kExitUsage;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw std::invalid_argument("oracle needs one --input");
  Graph g = load_graph(cfg, cfg.inputs[0]);
  Json j;
  int value = 0;
  if (cfg.action == "chi") {
    Coloring c = chi_exact(g, cfg.limits);
    value = c.num_colors;
    j = {{"chi", value}, {"coloring", coloring_to_json(to_multicoloring(c))}};
  } else if (cfg.action == "chiw") {
    VertexWeights w = cfg.weights_path.empty() ? VertexWeights::unit(g.n())
                                               : read_weights_file(cfg.weights_path, g.n());
    MultiColoring c = chi_w_exact(g, w, cfg.limits);
    value = c.num_colors;
    j = {{"chi_w", value}, {"coloring", coloring_to_json(c)}};
  } else if (cfg.action == "omega") {
    VertexSet clique = max_clique_exact(g, cfg.limits);
    value = static_cast<int>(clique.size());
    j = {{"omega", value}, {"clique", clique}};
  } else if (cfg.action == "alpha") {
    VertexSet indep = max_independent_set_exact(g, cfg.limits);
    value = static_cast<int>(indep.size());
    j = {{"alpha", value}, {"independent_set", indep}};
  } else if (cfg.action == "matching") {
    Matching m = max_matching(g);
    value = m.size();
    Json edges = Json::array();
    for (auto [u, v] : m.edges) edges.push_back({u, v});
    j = {{"matching", value}, {"edges", std::move(edges)}};
    if (g.n() <= cfg.limits.matching_brute_n) {
      j["bruteforce"] = max_matching_bruteforce(g, cfg.limits);
    }
  } else if (cfg.action == "validate") {
    if (cfg.coloring_path.empty()) throw std::invalid_argument("validate needs --coloring");
    std::ifstream in(cfg.coloring_path);
    if (!in) throw ParseError(0, "cannot open '" + cfg.coloring_path + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    MultiColoring c = coloring_from_json(doc, g.n());
    VertexWeights w = VertexWeights::unit(g.n());
    if (!cfg.weights_path.empty()) {
      w = read_weights_file(cfg.weights_path, g.n());
    } else if (doc.contains("weights")) {
      w = VertexWeights(doc.at("weights").get<std::vector<int>>());
    }
    auto error = multicoloring_error(g, w, c);
    value = colors_used(c);
    j = {{"valid", !error.has_value()}, {"colors", value}};
    if (error) j["error"] = *error;
    if (cfg.report == "text") {
      emit(cfg, out, error ? "invalid: " + *error + "\n" : "valid " + std::to_string(value) + "\n");
    } else {
      emit(cfg, out, render(j));
    }
    return error ? kExitInvalidColoring : kExitOk;
  } else {
    throw std::invalid_argument("unknown oracle target '" + cfg.action + "'");
  }
  emit(cfg, out, cfg.report == "text" ? std::to_string(value) + "\n" : render(j));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Chromatic number of {P5, co-P5}-free and {P5, K_p-e}-free graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json-errors", cfg.json_errors, "Print errors as JSON on stderr");
  app.add_option("--oracle-n", cfg.limits.oracle_n, "Vertex limit of the exact solvers")
      ->envname("P5COL_ORACLE_N")
      ->check(CLI::PositiveNumber);
  app.add_option("--weight-sum", cfg.limits.weight_sum, "Weight-sum limit of chi_w_exact")
      ->envname("P5COL_WEIGHT_SUM")
      ->check(CLI::PositiveNumber);
  app.add_option("--berge-n", cfg.limits.berge_n, "Vertex limit of the Berge check")
      ->envname("P5COL_BERGE_N")
      ->check(CLI::PositiveNumber);

  auto add_input = [&](CLI::App* sub, bool many) {
    if (many) {
      sub->add_option("-i,--input", cfg.inputs, "Graph file(s), '-' for stdin")->required();
    } else {
      sub->add_option("-i,--input", cfg.inputs, "Graph file, '-' for stdin")
          ->required()
          ->expected(1);
    }
    sub->add_option("-f,--format", cfg.format, "dimacs | edges (default: by extension)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
    sub->add_option("--report", cfg.report, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", cfg.class_name, "p5-cop5 | p5-kpe")
        ->check(CLI::IsMember({"p5-cop5", "p5-kpe"}));
    sub->add_option("--p", cfg.p, "Parameter p of K_p - e (p >= 3)");
  };

  auto* solve = app.add_subcommand("solve", "Chromatic number with certificate");
  add_input(solve, true);
  add_class(solve);
  add_output(solve);
  solve->add_option("-w,--weights", cfg.weights_path, "Vertex weights file (p5-cop5 only)");
  solve->add_flag("--timings", cfg.timings, "Include wall-clock time in reports");
  solve->add_option("-j,--jobs", cfg.jobs, "Parallel solves over multiple inputs")
      ->check(CLI::PositiveNumber);

  auto* decompose = app.add_subcommand("decompose", "Print a decomposition tree as JSON");
  add_input(decompose, false);
  decompose->add_option("--kind", cfg.kind, "cliquesep | modular")
      ->check(CLI::IsMember({"cliquesep", "modular"}));
  decompose->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  auto* generate = app.add_subcommand("generate", "Generate class members");
  add_class(generate);
  generate->add_option("-n,--n", cfg.n, "Vertex count")->check(CLI::PositiveNumber);
  generate->add_option("--seed", cfg.seed, "Random seed");
  generate->add_option("--density", cfg.density, "Edge density (p5-kpe)")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--count", cfg.count, "Number of instances")->check(CLI::PositiveNumber);
  generate->add_option("-f,--format", cfg.format, "dimacs | edges (default dimacs)");
  generate->add_option("-o,--output", cfg.output, "Output file for a single instance");
  generate->add_option("--output-dir", cfg.output_dir, "Directory for multiple instances");

  auto* verify = app.add_subcommand("verify", "Empirical checks and oracle cross-checks");
  verify->add_option("target", cfg.action, "lemma4 | lemma5 | gyarfas | oracle")
      ->required()
      ->check(CLI::IsMember({"lemma4", "lemma5", "gyarfas", "oracle"}));
  add_class(verify);
  verify->add_option("--samples", cfg.samples, "Sample count")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", cfg.n_max, "Largest vertex count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_flag("--weighted", cfg.weighted, "Random weights 1..3 (oracle, p5-cop5)");
  add_output(verify);

  auto* oracle = app.add_subcommand("oracle", "Exact desk-scale solvers");
  oracle->add_option("target", cfg.action, "chi | chiw | omega | alpha | matching | validate")
      ->required()
      ->check(CLI::IsMember({"chi", "chiw", "omega", "alpha", "matching", "validate"}));
  add_input(oracle, false);
  oracle->add_option("-w,--weights", cfg.weights_path, "Vertex weights file");
  oracle->add_option("--coloring", cfg.coloring_path, "Coloring or solve report (validate)");
  add_output(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, out, err);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (generate->parsed()) return cmd_generate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
  } catch (...) {
    Failure f = describe_failure();
    if (cfg.json_errors) {
      err << f.detail.dump() << "\n";
    } else {
      err << "error: " << f.detail["message"].get<std::string>() << "\n";
    }
    return f.code;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("p5col");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace p5col
