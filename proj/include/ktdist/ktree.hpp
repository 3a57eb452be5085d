#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "ktdist/graph.hpp"
#include "ktdist/worker_pool.hpp"

namespace ktdist {

// Attachment through the k-clique carrying registry label `target` (1-based).
struct AttachmentStep {
  std::size_t target = 1;

  friend auto operator<=>(const AttachmentStep&, const AttachmentStep&) = default;
};

// Registry size k(n - k) + 1 for n >= k + 1; 1 for n = k.
std::size_t registry_size(int k, int n);

// A k-tree together with its labeled k-cliques and the attachments that
// built it.
//
// Registry labels 1..k+1 are the k-cliques of the base K_{k+1} in
// lexicographic order; each attachment appends the k new cliques it creates,
// again in lexicographic order. The single-clique tree K_k is also
// representable (order() == k, one registry entry, empty trace); it is not
// reachable by attachment and cannot be extended.
class KTree {
 public:
  int k() const { return k_; }
  std::size_t order() const { return graph_.order(); }
  const SimpleGraph& graph() const { return graph_; }
  std::span<const Clique> registry() const { return registry_; }
  // 1-based lookup.
  const Clique& clique(std::size_t label) const { return registry_.at(label - 1); }
  std::span<const AttachmentStep> trace() const { return trace_; }

  friend bool operator==(const KTree&, const KTree&) = default;

 private:
  KTree(int k, SimpleGraph graph, std::vector<Clique> registry, std::vector<AttachmentStep> trace)
      : k_(k), graph_(std::move(graph)), registry_(std::move(registry)), trace_(std::move(trace)) {}

  friend KTree single_clique_ktree(int k);
  friend KTree base_ktree(int k);
  friend KTree attach(const KTree& t, AttachmentStep step);

  int k_ = 1;
  SimpleGraph graph_;
  std::vector<Clique> registry_;
  std::vector<AttachmentStep> trace_;
};

// K_k. Throws std::invalid_argument for k < 1.
KTree single_clique_ktree(int k);
// K_{k+1}. Throws std::invalid_argument for k < 1.
KTree base_ktree(int k);
// Throws std::invalid_argument if step.target is outside 1..registry size,
// or if t is the single-clique tree.
KTree attach(const KTree& t, AttachmentStep step);
// Replays steps from base_ktree(k). An out-of-range step raises
// std::invalid_argument naming its 1-based position in `steps`.
KTree from_trace(int k, std::span<const AttachmentStep> steps);

// One representative per isomorphism class of k-trees, for every order
// n = k..nmax (result[n - k]). Each level is ordered by canonical form and
// each representative is the first candidate of its class in
// (parent, attachment label) order, so the output does not depend on the
// pool or its scheduling. Throws std::invalid_argument if k < 1 or nmax < k.
std::vector<std::vector<KTree>> generate_all(int k, int nmax, const WorkerPool* pool = nullptr);

// Reverse peeling: repeatedly delete a vertex of degree exactly k whose
// neighbourhood is a clique, until k vertices remain; accept iff those form
// K_k. With a seed, the vertex to delete is drawn at random among the
// eligible ones; otherwise the lowest-numbered is taken.
bool is_ktree(const SimpleGraph& g, int k, std::optional<std::uint64_t> peel_seed = std::nullopt);

// {"k": int, "trace": [int, ...]}; the single-clique tree adds "n": k.
nlohmann::json to_json(const KTree& t);
// Replays and validates the trace. Throws std::invalid_argument.
KTree ktree_from_json(const nlohmann::json& j);

}  // namespace ktdist
