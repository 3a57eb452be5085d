// ktdist: k-tree clique distance matrices and their integer invariants.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or I/O error,
// 3 domain error (for example a disconnected d-clique graph).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ktdist/canonical.hpp"
#include "ktdist/clique_metric.hpp"
#include "ktdist/graph_io.hpp"
#include "ktdist/ktree.hpp"
#include "ktdist/matrix_io.hpp"
#include "ktdist/smith.hpp"
#include "ktdist/theory.hpp"
#include "ktdist/verify.hpp"
#include "ktdist/worker_pool.hpp"

namespace {

using namespace ktdist;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int k = 0;
  int n = 0;
  int d = 0;
  std::string input;
  std::string graph6;
  std::string trace;
  std::string out;
  std::string format = "text";
  bool labels = false;
  std::size_t jobs = 0;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out.flush()) throw IoError("cannot write " + path);
}

std::vector<AttachmentStep> parse_trace(const std::string& text) {
  std::vector<AttachmentStep> steps;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      steps.push_back(AttachmentStep{static_cast<std::size_t>(v)});
    } catch (const std::exception&) {
      throw UsageError("trace entries must be positive integers, got \"" + item + "\"");
    }
  }
  return steps;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_generate(const RunConfig& cfg, const WorkerPool& pool) {
  if (cfg.k < 1 || cfg.n < cfg.k) throw UsageError("generate needs -k >= 1 and -n >= k");
  if (cfg.format != "json" && cfg.format != "graph6" && cfg.format != "text") {
    throw UsageError("generate supports --format json, graph6 or text");
  }
  const auto levels = generate_all(cfg.k, cfg.n, &pool);
  std::string counts;
  std::string records;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int n = cfg.k + static_cast<int>(i);
    counts += (i > 0 ? " n=" : "n=") + std::to_string(n) + ":" + std::to_string(levels[i].size());
    for (const KTree& t : levels[i]) {
      if (cfg.format == "json") {
        records += to_json(t).dump() + "\n";
      } else if (cfg.format == "graph6") {
        records += to_graph6(t.graph()) + "\n";
      } else {
        records += "n=" + std::to_string(n) + " trace=" + to_json(t)["trace"].dump() + " graph6=" +
                   to_graph6(t.graph()) + "\n";
      }
    }
  }
  if (!cfg.out.empty()) write_output(cfg.out, records);
  std::cout << counts << '\n';
  return 0;
}

int cmd_dmatrix(const RunConfig& cfg) {
  const int sources = !cfg.input.empty() + !cfg.graph6.empty() + !cfg.trace.empty();
  if (sources != 1) throw UsageError("dmatrix needs exactly one of --in, --g6, --trace");

  std::optional<KTree> tree;
  SimpleGraph graph;
  if (!cfg.trace.empty()) {
    if (cfg.k < 1) throw UsageError("--trace needs -k >= 1");
    try {
      tree = from_trace(cfg.k, parse_trace(cfg.trace));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (!cfg.graph6.empty()) {
    try {
      graph = from_graph6(cfg.graph6);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    const std::string text = read_input(cfg.input);
    const auto first = text.find_first_not_of(" \t\r\n");
    try {
      if (first != std::string::npos && text[first] == '{') {
        const auto j = nlohmann::json::parse(text);
        if (j.contains("trace")) {
          tree = ktree_from_json(j);
        } else {
          graph = graph_from_json(j);
        }
      } else {
        graph = from_graph6(text.substr(first == std::string::npos ? text.size() : first));
      }
    } catch (const std::exception& e) {
      throw UsageError(cfg.input + ": " + e.what());
    }
  }

  int d = cfg.d;
  if (tree) {
    graph = tree->graph();
    if (d == 0) d = tree->k();
  } else if (d == 0) {
    d = 1;
  }
  if (d < 1 || static_cast<std::size_t>(d) > graph.order()) {
    throw UsageError("-d must lie in 1.." + std::to_string(graph.order()));
  }
  const DistanceMatrix dm = (tree && d == tree->k()) ? k_distance_matrix(*tree) : d_distance_matrix(graph, d);

  std::string content;
  if (cfg.format == "json") {
    nlohmann::json j = matrix_to_json(dm.entries());
    if (cfg.labels) {
      nlohmann::json labels = nlohmann::json::array();
      for (const Clique& c : dm.labels()) labels.push_back(std::vector<VertexId>(c.members().begin(), c.members().end()));
      j["labels"] = std::move(labels);
    }
    content = dump(j);
  } else if (cfg.format == "csv") {
    content = format_matrix_csv(dm.entries(), cfg.labels ? dm.labels() : std::span<const Clique>{});
  } else if (cfg.format == "text") {
    content = format_matrix_text(dm.entries());
  } else {
    throw UsageError("dmatrix supports --format text, json or csv");
  }
  write_output(cfg.out, content);
  return 0;
}

IntMatrix load_matrix(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_matrix(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_snf(const RunConfig& cfg) {
  const Snf s = snf(load_matrix(cfg.input));
  if (cfg.format == "json") {
    write_output(cfg.out, dump(snf_to_json(s)));
  } else {
    write_output(cfg.out, format_factors(s.invariant_factors) + "\n");
  }
  return 0;
}

int cmd_det(const RunConfig& cfg) {
  const IntMatrix m = load_matrix(cfg.input);
  if (m.rows() != m.cols()) throw UsageError(cfg.input + ": determinant needs a square matrix");
  const BigInt det = determinant(m);
  if (cfg.format == "json") {
    write_output(cfg.out, dump({{"det", bigint_to_json(det)}}));
  } else {
    write_output(cfg.out, det.to_string() + "\n");
  }
  return 0;
}

int cmd_predict(const RunConfig& cfg) {
  if (cfg.k < 1 || cfg.n < cfg.k + 1) throw UsageError("predict needs -k >= 1 and -n >= k + 1");
  const PredictedSpectrum p = predicted_snf(cfg.k, cfg.n);
  const BigInt det = predicted_det(cfg.k, cfg.n);
  if (cfg.format == "json") {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : p.factors) factors.push_back(bigint_to_json(f));
    write_output(cfg.out, dump({{"k", cfg.k}, {"n", cfg.n}, {"factors", factors}, {"det", bigint_to_json(det)}}));
  } else {
    write_output(cfg.out, "snf: " + format_factors(p.factors) + "\ndet: " + det.to_string() + "\n");
  }
  return 0;
}

template <typename Report>
int emit_report(const RunConfig& cfg, const Report& report) {
  write_output(cfg.out, cfg.format == "json" ? dump(to_json(report)) : to_text(report));
  return 0;
}

int cmd_verify(const std::string& check, const RunConfig& cfg, const WorkerPool& pool) {
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("verify supports --format text or json");
  if (cfg.k < 1) throw UsageError("verify needs -k >= 1");
  if (check == "theorem") {
    const int d = cfg.d == 0 ? cfg.k : cfg.d;
    if (d > cfg.k) throw UsageError("-d must lie in 1..k");
    if (cfg.n < cfg.k + 2) throw UsageError("verify theorem needs --nmax >= k + 2");
    const auto report = verify_theorem(cfg.k, cfg.n, d, &pool);
    emit_report(cfg, report);
    return report.passed() ? 0 : kExitMismatch;
  }
  if (check == "equivalence") {
    if (cfg.n < cfg.k + 2) throw UsageError("verify equivalence needs --nmax >= k + 2");
    const auto report = verify_equivalence(cfg.k, cfg.n, cfg.seed, &pool);
    emit_report(cfg, report);
    return report.passed() ? 0 : kExitMismatch;
  }
  const int d = cfg.d == 0 ? 1 : cfg.d;
  if (d > cfg.k) throw UsageError("-d must lie in 1..k");
  if (cfg.n < cfg.k + 1) throw UsageError("verify survey needs --nmax >= k + 1");
  return emit_report(cfg, survey_snf(cfg.k, d, cfg.n, &pool));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-tree clique distance matrices: Smith normal forms, determinants, closed-form checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "Output path (default: stdout)");
  };
  auto add_jobs = [&cfg](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->envname("KTDIST_JOBS");
  };

  auto* generate = app.add_subcommand("generate", "Enumerate non-isomorphic k-trees up to order n");
  generate->add_option("-k", cfg.k, "Clique parameter")->required();
  generate->add_option("-n,--nmax", cfg.n, "Largest order")->required();
  add_common(generate, {"text", "json", "graph6"});
  add_jobs(generate);

  auto* dmatrix = app.add_subcommand("dmatrix", "d-distance matrix of a graph or k-tree");
  dmatrix->add_option("--in", cfg.input, "Graph (graph6 or JSON) or k-tree JSON file, '-' for stdin");
  dmatrix->add_option("--g6", cfg.graph6, "Graph in graph6");
  dmatrix->add_option("--trace", cfg.trace, "Comma-separated attachment labels (needs -k)");
  dmatrix->add_option("-k", cfg.k, "Clique parameter for --trace");
  dmatrix->add_option("-d", cfg.d, "Clique dimension (default: k for k-trees, 1 for graphs)");
  dmatrix->add_flag("--labels", cfg.labels, "Include clique labels (csv header / json field)");
  add_common(dmatrix, {"text", "json", "csv"});

  auto* snf_cmd = app.add_subcommand("snf", "Invariant factors of a matrix file");
  snf_cmd->add_option("matrix", cfg.input, "Matrix file, '-' for stdin")->required();
  add_common(snf_cmd, {"text", "json"});

  auto* det_cmd = app.add_subcommand("det", "Exact determinant of a matrix file");
  det_cmd->add_option("matrix", cfg.input, "Matrix file, '-' for stdin")->required();
  add_common(det_cmd, {"text", "json"});

  auto* predict = app.add_subcommand("predict", "Closed-form Smith form and determinant");
  predict->add_option("-k", cfg.k, "Clique parameter")->required();
  predict->add_option("-n", cfg.n, "Number of vertices")->required();
  add_common(predict, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Exhaustive checks over all k-trees");
  verify->require_subcommand(1);
  std::string check;
  const std::pair<const char*, const char*> checks[] = {
      {"theorem", "Compare every Smith form and determinant with the closed form"},
      {"equivalence", "Recursion, arrow reduction and relabeling invariance"},
      {"survey", "Group Smith forms by order, flag orders where they differ"},
  };
  for (const auto& [name, help] : checks) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("-k", cfg.k, "Clique parameter")->required();
    sub->add_option("-n,--nmax", cfg.n, "Largest order")->required();
    sub->add_option("-d", cfg.d, "Clique dimension");
    sub->add_option("--seed", cfg.seed, "Seed for randomized relabelings");
    add_common(sub, {"text", "json"});
    add_jobs(sub);
    sub->callback([&check, name] { check = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const WorkerPool pool(cfg.jobs);
    if (generate->parsed()) return cmd_generate(cfg, pool);
    if (dmatrix->parsed()) return cmd_dmatrix(cfg);
    if (snf_cmd->parsed()) return cmd_snf(cfg);
    if (det_cmd->parsed()) return cmd_det(cfg);
    if (predict->parsed()) return cmd_predict(cfg);
    return cmd_verify(check, cfg, pool);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotConnectedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
