#include "ktdist/ktree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>

#include "ktdist/canonical.hpp"

namespace ktdist {

std::size_t registry_size(int k, int n) {
  if (k < 1 || n < k) throw std::invalid_argument("registry_size: need 1 <= k <= n");
  if (n == k) return 1;
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k) + 1;
}

KTree single_clique_ktree(int k) {
  if (k < 1) throw std::invalid_argument("single_clique_ktree: k must be >= 1");
  const auto n = static_cast<std::size_t>(k);
  std::vector<VertexId> members(n);
  for (VertexId v = 0; v < n; ++v) members[v] = v;
  return KTree(k, SimpleGraph::complete(n), {Clique(std::move(members))}, {});
}

KTree base_ktree(int k) {
  if (k < 1) throw std::invalid_argument("base_ktree: k must be >= 1");
  const auto n = static_cast<std::size_t>(k) + 1;
  SimpleGraph g = SimpleGraph::complete(n);
  return KTree(k, g, enumerate_cliques(g, static_cast<std::size_t>(k)), {});
}

KTree attach(const KTree& t, AttachmentStep step) {
  if (t.order() == static_cast<std::size_t>(t.k())) {
    throw std::invalid_argument("attach: the single-clique tree K_k has no attachment labels");
  }
  const std::size_t size = t.registry().size();
  if (step.target < 1 || step.target > size) {
    throw std::invalid_argument("attach: label " + std::to_string(step.target) + " outside 1.." +
                                std::to_string(size));
  }
  const Clique& through = t.clique(step.target);
  const auto fresh = static_cast<VertexId>(t.order());

  std::vector<Clique> added;
  added.reserve(through.size());
  for (VertexId dropped : through.members()) {
    std::vector<VertexId> members;
    for (VertexId v : through.members()) {
      if (v != dropped) members.push_back(v);
    }
    members.push_back(fresh);
    added.emplace_back(std::move(members));
  }
  std::sort(added.begin(), added.end());

  std::vector<Clique> registry(t.registry().begin(), t.registry().end());
  registry.insert(registry.end(), added.begin(), added.end());
  std::vector<AttachmentStep> trace(t.trace().begin(), t.trace().end());
  trace.push_back(step);
  return KTree(t.k(), t.graph().with_vertex_joined_to(through.members()), std::move(registry),
               std::move(trace));
}

KTree from_trace(int k, std::span<const AttachmentStep> steps) {
  KTree t = base_ktree(k);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].target < 1 || steps[i].target > t.registry().size()) {
      throw std::invalid_argument("from_trace: step " + std::to_string(i + 1) + " has label " +
                                  std::to_string(steps[i].target) + " outside 1.." +
                                  std::to_string(t.registry().size()));
    }
    t = attach(t, steps[i]);
  }
  return t;
}

namespace {

// Per-order class table. offer() is the atomic test-and-insert: the class
// keeps the smallest candidate index seen, whatever the arrival order.
class ClassTable {
 public:
  void offer(CanonicalForm form, std::size_t candidate) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = classes_.try_emplace(std::move(form), candidate);
    if (!inserted) it->second = std::min(it->second, candidate);
  }
  // Sorted by canonical form.
  const std::map<CanonicalForm, std::size_t>& classes() const { return classes_; }

 private:
  std::mutex mutex_;
  std::map<CanonicalForm, std::size_t> classes_;
};

}  // namespace

std::vector<std::vector<KTree>> generate_all(int k, int nmax, const WorkerPool* pool) {
  if (k < 1) throw std::invalid_argument("generate_all: k must be >= 1");
  if (nmax < k) throw std::invalid_argument("generate_all: nmax must be >= k");
  std::vector<std::vector<KTree>> levels;
  levels.push_back({single_clique_ktree(k)});
  if (nmax == k) return levels;
  levels.push_back({base_ktree(k)});

  for (int n = k + 2; n <= nmax; ++n) {
    const auto& parents = levels.back();
    struct Candidate {
      std::size_t parent;
      AttachmentStep step;
    };
    std::vector<Candidate> candidates;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      for (std::size_t label = 1; label <= parents[p].registry().size(); ++label) {
        candidates.push_back({p, AttachmentStep{label}});
      }
    }
    ClassTable table;
    parallel_for(pool, candidates.size(), [&](std::size_t i) {
      const KTree child = attach(parents[candidates[i].parent], candidates[i].step);
      table.offer(canonical_form(child.graph()), i);
    });
    std::vector<KTree> level;
    level.reserve(table.classes().size());
    for (const auto& [form, index] : table.classes()) {
      level.push_back(attach(parents[candidates[index].parent], candidates[index].step));
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

bool is_ktree(const SimpleGraph& g, int k, std::optional<std::uint64_t> peel_seed) {
  if (k < 1 || g.order() < static_cast<std::size_t>(k)) return false;
  const std::size_t n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::optional<std::mt19937_64> rng;
  if (peel_seed) rng.emplace(*peel_seed);

  auto live_neighbors = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId u : g.neighbors(v)) {
      if (alive[u]) out.push_back(u);
    }
    return out;
  };
  auto pairwise_adjacent = [&](const std::vector<VertexId>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (!g.adjacent(vs[i], vs[j])) return false;
      }
    }
    return true;
  };

  for (std::size_t remaining = n; remaining > static_cast<std::size_t>(k); --remaining) {
    std::vector<VertexId> eligible;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v] && degree[v] == static_cast<std::size_t>(k) && pairwise_adjacent(live_neighbors(v))) {
        eligible.push_back(v);
        if (!rng) break;
      }
    }
    if (eligible.empty()) return false;
    VertexId chosen = eligible.front();
    if (rng) chosen = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(*rng)];
    alive[chosen] = 0;
    for (VertexId u : g.neighbors(chosen)) {
      if (alive[u]) --degree[u];
    }
  }
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) rest.push_back(v);
  }
  return pairwise_adjacent(rest);
}

nlohmann::json to_json(const KTree& t) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& s : t.trace()) trace.push_back(s.target);
  nlohmann::json j = {{"k", t.k()}, {"trace", std::move(trace)}};
  if (t.order() == static_cast<std::size_t>(t.k())) j["n"] = t.k();
  return j;
}

KTree ktree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("trace") || !j["k"].is_number_integer() ||
      !j["trace"].is_array()) {
    throw std::invalid_argument("k-tree JSON: expected {\"k\": int, \"trace\": [int, ...]}");
  }
  const int k = j["k"].get<int>();
  if (k < 1) throw std::invalid_argument("k-tree JSON: k must be >= 1");
  std::vector<AttachmentStep> steps;
  for (const auto& s : j["trace"]) {
    if (!s.is_number_unsigned()) throw std::invalid_argument("k-tree JSON: trace entries must be positive integers");
    steps.push_back(AttachmentStep{s.get<std::size_t>()});
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw std::invalid_argument("k-tree JSON: \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n == k && steps.empty()) return single_clique_ktree(k);
    if (n != k + 1 + static_cast<int>(steps.size())) {
      throw std::invalid_argument("k-tree JSON: \"n\" does not match the trace length");
    }
  }
  return from_trace(k, steps);
}

}  // namespace ktdist
