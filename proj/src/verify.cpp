#include "ktdist/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ktdist/clique_metric.hpp"
#include "ktdist/graph_io.hpp"
#include "ktdist/matrix_io.hpp"
#include "ktdist/theory.hpp"

namespace ktdist {

namespace {

std::vector<std::size_t> trace_labels(const KTree& t) {
  std::vector<std::size_t> out;
  for (const auto& s : t.trace()) out.push_back(s.target);
  return out;
}

DistanceMatrix distance_matrix_for(const KTree& t, int d) {
  return d == t.k() ? k_distance_matrix(t) : d_distance_matrix(t.graph(), d);
}

std::string format_trace(const std::vector<std::size_t>& trace) {
  std::string out = "[";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(trace[i]);
  }
  return out + "]";
}

nlohmann::json factors_json(const std::vector<BigInt>& factors) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : factors) j.push_back(bigint_to_json(f));
  return j;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(orders.begin(), orders.end(), [](const OrderReport& o) { return o.mismatches.empty(); });
}

VerificationReport verify_theorem(int k, int nmax, int d, const WorkerPool* pool) {
  if (k < 1 || d < 1 || d > k) throw std::invalid_argument("verify_theorem: need 1 <= d <= k");
  if (nmax < k + 2) throw std::invalid_argument("verify_theorem: nmax must be >= k + 2");
  const auto levels = generate_all(k, nmax, pool);

  VerificationReport report{k, d, k + 1, nmax, d == k, {}};
  for (int n = k + 1; n <= nmax; ++n) {
    const auto& classes = levels[static_cast<std::size_t>(n - k)];
    OrderReport order;
    order.n = n;
    order.classes = classes.size();
    order.predicted_factors = predicted_snf(k, n).factors;
    order.predicted_det = predicted_det(k, n);

    std::vector<ClassOutcome> outcomes(classes.size());
    parallel_for(pool, classes.size(), [&](std::size_t i) {
      const KTree& t = classes[i];
      const DistanceMatrix dm = distance_matrix_for(t, d);
      ClassOutcome& out = outcomes[i];
      out.trace = trace_labels(t);
      out.graph6 = to_graph6(t.graph());
      out.snf = snf(dm.entries());
      out.det = determinant(dm.entries());
      if (report.compared) {
        out.snf_ok = out.snf.invariant_factors == order.predicted_factors;
        out.det_ok = out.det == order.predicted_det;
      }
    });
    for (auto& out : outcomes) {
      order.snf_passed += out.snf_ok ? 1 : 0;
      order.det_passed += out.det_ok ? 1 : 0;
      if (!out.snf_ok || !out.det_ok) order.mismatches.push_back(std::move(out));
    }
    report.orders.push_back(std::move(order));
  }
  return report;
}

bool EquivalenceReport::passed() const {
  return std::all_of(orders.begin(), orders.end(), [](const EquivalenceOrder& o) {
    return o.recursion_ok == o.classes && o.arrow_ok == o.classes && o.relabel_ok == o.classes &&
           o.distinct_snfs == 1;
  });
}

EquivalenceReport verify_equivalence(int k, int nmax, std::uint64_t seed, const WorkerPool* pool) {
  if (k < 1) throw std::invalid_argument("verify_equivalence: k must be >= 1");
  if (nmax < k + 2) throw std::invalid_argument("verify_equivalence: nmax must be >= k + 2");
  const auto levels = generate_all(k, nmax, pool);

  EquivalenceReport report{k, nmax, seed, {}};
  for (int n = k + 2; n <= nmax; ++n) {
    const auto& classes = levels[static_cast<std::size_t>(n - k)];
    const IntMatrix arrow = arrow_matrix(k, n);
    struct Checks {
      bool recursion = false, arrow = false, relabel = false;
      Snf snf;
    };
    std::vector<Checks> checks(classes.size());
    parallel_for(pool, classes.size(), [&](std::size_t i) {
      const KTree& t = classes[i];
      const DistanceMatrix bfs = k_distance_matrix(t);
      Checks& c = checks[i];
      c.snf = snf(bfs.entries());
      c.recursion = recursive_distance_matrix(t) == bfs;
      const ArrowReduction reduced = reduce_to_arrow(bfs, t);
      c.arrow = reduced.matrix == arrow && snf(reduced.matrix) == c.snf;

      // seed_seq keeps only the low 32 bits of each value, so split the seed
      std::seed_seq seq{seed & 0xffffffffu, seed >> 32, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)};
      std::mt19937_64 rng(seq);
      std::vector<std::size_t> rho(static_cast<std::size_t>(bfs.order()));
      std::iota(rho.begin(), rho.end(), std::size_t{1});
      std::shuffle(rho.begin(), rho.end(), rng);
      c.relabel = snf(permutation_conjugate(bfs, rho).entries()) == c.snf;
    });

    EquivalenceOrder order;
    order.n = n;
    order.classes = classes.size();
    std::vector<Snf> distinct;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Checks& c = checks[i];
      order.recursion_ok += c.recursion;
      order.arrow_ok += c.arrow;
      order.relabel_ok += c.relabel;
      if (std::find(distinct.begin(), distinct.end(), c.snf) == distinct.end()) distinct.push_back(c.snf);
      if (!c.recursion || !c.arrow || !c.relabel) order.failing_traces.push_back(trace_labels(classes[i]));
    }
    order.distinct_snfs = distinct.size();
    report.orders.push_back(std::move(order));
  }
  return report;
}

std::optional<int> SurveyReport::first_nonconstant_order() const {
  for (const auto& o : orders) {
    if (!o.constant()) return o.n;
  }
  return std::nullopt;
}

SurveyReport survey_snf(int k, int d, int nmax, const WorkerPool* pool) {
  if (k < 1 || d < 1 || d > k) throw std::invalid_argument("survey_snf: need 1 <= d <= k");
  if (nmax < k + 1) throw std::invalid_argument("survey_snf: nmax must be >= k + 1");
  const auto levels = generate_all(k, nmax, pool);

  SurveyReport report{k, d, nmax, {}};
  for (int n = k + 1; n <= nmax; ++n) {
    const auto& classes = levels[static_cast<std::size_t>(n - k)];
    std::vector<SurveyGroup> computed(classes.size());
    parallel_for(pool, classes.size(), [&](std::size_t i) {
      const DistanceMatrix dm = distance_matrix_for(classes[i], d);
      computed[i] = SurveyGroup{snf(dm.entries()), determinant(dm.entries()), 1, trace_labels(classes[i]),
                                to_graph6(classes[i].graph()), dm.entries()};
    });
    SurveyOrder order;
    order.n = n;
    order.classes = classes.size();
    for (auto& c : computed) {
      auto it = std::find_if(order.groups.begin(), order.groups.end(),
                             [&](const SurveyGroup& g) { return g.snf == c.snf && g.det == c.det; });
      if (it == order.groups.end()) {
        order.groups.push_back(std::move(c));
      } else {
        ++it->count;
      }
    }
    report.orders.push_back(std::move(order));
  }
  return report;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : r.orders) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : o.mismatches) {
      mismatches.push_back({{"trace", m.trace},
                            {"graph6", m.graph6},
                            {"snf", snf_to_json(m.snf)},
                            {"det", bigint_to_json(m.det)},
                            {"snf_ok", m.snf_ok},
                            {"det_ok", m.det_ok}});
    }
    nlohmann::json entry = {{"n", o.n}, {"classes", o.classes}, {"mismatches", std::move(mismatches)}};
    if (r.compared) {
      entry["snf_passed"] = o.snf_passed;
      entry["det_passed"] = o.det_passed;
      entry["predicted_factors"] = factors_json(o.predicted_factors);
      entry["predicted_det"] = bigint_to_json(o.predicted_det);
    }
    orders.push_back(std::move(entry));
  }
  return {{"check", "theorem"}, {"k", r.k},           {"d", r.d},
          {"nmin", r.nmin},     {"nmax", r.nmax},     {"compared", r.compared},
          {"passed", r.passed()}, {"orders", std::move(orders)}};
}

nlohmann::json to_json(const EquivalenceReport& r) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : r.orders) {
    orders.push_back({{"n", o.n},
                      {"classes", o.classes},
                      {"recursion_ok", o.recursion_ok},
                      {"arrow_ok", o.arrow_ok},
                      {"relabel_ok", o.relabel_ok},
                      {"distinct_snfs", o.distinct_snfs},
                      {"failing_traces", o.failing_traces}});
  }
  return {{"check", "equivalence"}, {"k", r.k}, {"nmax", r.nmax}, {"seed", r.seed},
          {"passed", r.passed()}, {"orders", std::move(orders)}};
}

nlohmann::json to_json(const SurveyReport& r) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : r.orders) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : o.groups) {
      nlohmann::json entry = {{"snf", snf_to_json(g.snf)},
                              {"det", bigint_to_json(g.det)},
                              {"count", g.count},
                              {"example_trace", g.example_trace},
                              {"example_graph6", g.example_graph6}};
      if (!o.constant()) entry["example_matrix"] = matrix_to_json(g.example_matrix);
      groups.push_back(std::move(entry));
    }
    orders.push_back({{"n", o.n}, {"classes", o.classes}, {"constant", o.constant()}, {"groups", std::move(groups)}});
  }
  nlohmann::json j = {{"check", "survey"}, {"k", r.k}, {"d", r.d}, {"nmax", r.nmax}, {"orders", std::move(orders)}};
  const auto witness = r.first_nonconstant_order();
  j["first_nonconstant_order"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem check k=" << r.k << " d=" << r.d << " n=" << r.nmin << ".." << r.nmax << '\n';
  if (!r.compared) out << "(d != k: invariants computed, no closed form to compare)\n";
  out << std::setw(4) << "n" << std::setw(9) << "classes" << std::setw(10) << "snf-pass" << std::setw(10)
      << "det-pass" << "  predicted snf | det\n";
  for (const auto& o : r.orders) {
    out << std::setw(4) << o.n << std::setw(9) << o.classes;
    if (r.compared) {
      out << std::setw(10) << o.snf_passed << std::setw(10) << o.det_passed << "  "
          << format_factors(o.predicted_factors) << " | " << o.predicted_det;
    }
    out << '\n';
    for (const auto& m : o.mismatches) {
      out << "  mismatch trace=" << format_trace(m.trace) << " graph6=" << m.graph6
          << " snf=" << format_factors(m.snf.invariant_factors) << " det=" << m.det << '\n';
    }
  }
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_text(const EquivalenceReport& r) {
  std::ostringstream out;
  out << "equivalence check k=" << r.k << " n=" << r.k + 2 << ".." << r.nmax << " seed=" << r.seed << '\n';
  out << std::setw(4) << "n" << std::setw(9) << "classes" << std::setw(11) << "recursion" << std::setw(7)
      << "arrow" << std::setw(9) << "relabel" << std::setw(14) << "distinct-snf" << '\n';
  for (const auto& o : r.orders) {
    out << std::setw(4) << o.n << std::setw(9) << o.classes << std::setw(11) << o.recursion_ok << std::setw(7)
        << o.arrow_ok << std::setw(9) << o.relabel_ok << std::setw(14) << o.distinct_snfs << '\n';
    for (const auto& t : o.failing_traces) out << "  failing trace=" << format_trace(t) << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_text(const SurveyReport& r) {
  std::ostringstream out;
  out << "survey k=" << r.k << " d=" << r.d << " n=" << r.k + 1 << ".." << r.nmax << '\n';
  for (const auto& o : r.orders) {
    out << "n=" << o.n << " classes=" << o.classes << " distinct=" << o.groups.size()
        << (o.constant() ? " constant" : " NON-CONSTANT") << '\n';
    for (const auto& g : o.groups) {
      out << "  count=" << g.count << " snf=" << format_factors(g.snf.invariant_factors) << " det=" << g.det;
      if (!o.constant()) {
        out << " trace=" << format_trace(g.example_trace) << " graph6=" << g.example_graph6 << '\n';
        std::istringstream rows(format_matrix_text(g.example_matrix));
        std::string line;
        std::getline(rows, line);  // dimensions
        while (std::getline(rows, line)) out << "    " << line << '\n';
      } else {
        out << '\n';
      }
    }
  }
  const auto witness = r.first_nonconstant_order();
  out << "first non-constant order: " << (witness ? std::to_string(*witness) : "none") << '\n';
  return out.str();
}

}  // namespace ktdist
