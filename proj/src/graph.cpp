#include "ktdist/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ktdist {

Clique::Clique(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("Clique: repeated member");
  }
}

bool Clique::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool Clique::is_subset_of(const Clique& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string Clique::label(bool separated) const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (separated && i > 0) out += '-';
    out += std::to_string(members_[i]);
  }
  return out;
}

SimpleGraph::SimpleGraph(std::size_t order, std::span<const Edge> edges)
    : neighbors_(order), matrix_(order * order, 0) {
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw std::invalid_argument("SimpleGraph: edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} has an endpoint outside 0.." +
                                  std::to_string(order == 0 ? 0 : order - 1));
    }
    if (u == v) throw std::invalid_argument("SimpleGraph: self-loop at " + std::to_string(u));
    if (matrix_[u * order + v]) {
      throw std::invalid_argument("SimpleGraph: duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    }
    matrix_[u * order + v] = matrix_[v * order + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

SimpleGraph SimpleGraph::complete(std::size_t order) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < order; ++u) {
    for (VertexId v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  }
  return SimpleGraph(order, edges);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_clique(const Clique& c) const {
  const auto m = c.members();
  if (!m.empty() && m.back() >= order()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!adjacent(m[i], m[j])) return false;
    }
  }
  return true;
}

bool SimpleGraph::is_connected() const {
  if (order() == 0) return true;
  std::vector<char> seen(order(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : neighbors_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == order();
}

SimpleGraph SimpleGraph::permuted(std::span<const VertexId> perm) const {
  if (perm.size() != order()) throw std::invalid_argument("permuted: wrong permutation length");
  std::vector<char> hit(order(), 0);
  for (VertexId p : perm) {
    if (p >= order() || hit[p]) throw std::invalid_argument("permuted: not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> relabeled;
  relabeled.reserve(edge_count_);
  for (auto [u, v] : edges()) relabeled.emplace_back(perm[u], perm[v]);
  return SimpleGraph(order(), relabeled);
}

SimpleGraph SimpleGraph::with_vertex_joined_to(std::span<const VertexId> neighbors) const {
  auto e = edges();
  const auto fresh = static_cast<VertexId>(order());
  for (VertexId v : neighbors) e.emplace_back(v, fresh);
  return SimpleGraph(order() + 1, e);
}

namespace {

void extend_cliques(const SimpleGraph& g, std::size_t size, std::vector<VertexId>& current,
                    const std::vector<VertexId>& candidates, std::vector<Clique>& out) {
  if (current.size() == size) {
    out.emplace_back(current);
    return;
  }
  const std::size_t needed = size - current.size();
  for (std::size_t i = 0; i + needed <= candidates.size(); ++i) {
    const VertexId v = candidates[i];
    std::vector<VertexId> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    }
    if (next.size() + 1 < needed) continue;
    current.push_back(v);
    extend_cliques(g, size, current, next, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const SimpleGraph& g, std::size_t size) {
  if (size == 0 || size > g.order()) {
    throw std::invalid_argument("enumerate_cliques: size " + std::to_string(size) +
                                " outside 1.." + std::to_string(g.order()));
  }
  std::vector<VertexId> all(g.order());
  for (VertexId v = 0; v < g.order(); ++v) all[v] = v;
  std::vector<Clique> out;
  std::vector<VertexId> current;
  extend_cliques(g, size, current, all, out);
  return out;
}

}  // namespace ktdist
