#include "ktdist/clique_metric.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ktdist {

bool DCliqueGraph::adjacent(std::size_t i, std::size_t j) const {
  return std::binary_search(adjacency[i].begin(), adjacency[i].end(), j);
}

bool DCliqueGraph::is_connected() const {
  if (nodes.empty()) return true;
  std::vector<char> seen(nodes.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == nodes.size();
}

DCliqueGraph d_clique_graph(const SimpleGraph& g, int d) {
  if (d < 1 || static_cast<std::size_t>(d) > g.order()) {
    throw std::invalid_argument("d_clique_graph: d=" + std::to_string(d) + " outside 1.." +
                                std::to_string(g.order()));
  }
  return d_clique_graph(g, d, enumerate_cliques(g, static_cast<std::size_t>(d)));
}

DCliqueGraph d_clique_graph(const SimpleGraph& g, int d, std::vector<Clique> nodes) {
  if (d < 1 || static_cast<std::size_t>(d) > g.order()) {
    throw std::invalid_argument("d_clique_graph: d=" + std::to_string(d) + " outside 1.." +
                                std::to_string(g.order()));
  }
  const auto size = static_cast<std::size_t>(d);
  std::map<Clique, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].size() != size || !g.is_clique(nodes[i]) || !index.emplace(nodes[i], i).second) {
      throw std::invalid_argument("d_clique_graph: node list is not a set of " +
                                  std::to_string(d) + "-cliques");
    }
  }
  if (nodes.size() != enumerate_cliques(g, size).size()) {
    throw std::invalid_argument("d_clique_graph: node list misses some " + std::to_string(d) + "-cliques");
  }

  DCliqueGraph h{d, std::move(nodes), {}};
  h.adjacency.resize(h.nodes.size());
  if (size < g.order()) {
    for (const Clique& cofacet : enumerate_cliques(g, size + 1)) {
      std::vector<std::size_t> faces;
      for (VertexId dropped : cofacet.members()) {
        std::vector<VertexId> members;
        for (VertexId v : cofacet.members()) {
          if (v != dropped) members.push_back(v);
        }
        faces.push_back(index.at(Clique(std::move(members))));
      }
      for (std::size_t a : faces) {
        for (std::size_t b : faces) {
          if (a != b) h.adjacency[a].push_back(b);
        }
      }
    }
  }
  for (auto& list : h.adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return h;
}

DistanceMatrix::DistanceMatrix(IntMatrix entries, std::vector<Clique> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("DistanceMatrix: not square");
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != entries_.rows()) {
    throw std::invalid_argument("DistanceMatrix: label count differs from order");
  }
  for (Index i = 0; i < order(); ++i) {
    if (!entries_(i, i).is_zero()) throw std::invalid_argument("DistanceMatrix: nonzero diagonal");
    for (Index j = i + 1; j < order(); ++j) {
      if (entries_(i, j) != entries_(j, i)) throw std::invalid_argument("DistanceMatrix: not symmetric");
      if (entries_(i, j) < BigInt(1)) {
        throw std::invalid_argument("DistanceMatrix: off-diagonal entry below 1");
      }
    }
  }
}

bool DistanceMatrix::satisfies_triangle_inequality() const {
  for (Index a = 0; a < order(); ++a) {
    for (Index b = 0; b < order(); ++b) {
      for (Index c = 0; c < order(); ++c) {
        if (entries_(a, c) > entries_(a, b) + entries_(b, c)) return false;
      }
    }
  }
  return true;
}

DistanceMatrix d_distance_matrix(const DCliqueGraph& h) {
  const std::size_t n = h.nodes.size();
  IntMatrix m(static_cast<Index>(n), static_cast<Index>(n));
  std::vector<long long> dist(n);
  std::vector<std::size_t> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const std::size_t u = queue[head++];
      for (std::size_t v : h.adjacency[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (tail != n) {
      throw NotConnectedError("the " + std::to_string(h.d) + "-clique graph is not connected: " +
                              h.nodes[s].label(true) + " reaches " + std::to_string(tail) + " of " +
                              std::to_string(n) + " cliques");
    }
    for (std::size_t t = 0; t < n; ++t) m(static_cast<Index>(s), static_cast<Index>(t)) = dist[t];
  }
  return DistanceMatrix(std::move(m), h.nodes);
}

DistanceMatrix d_distance_matrix(const SimpleGraph& g, int d) {
  return d_distance_matrix(d_clique_graph(g, d));
}

DistanceMatrix k_distance_matrix(const KTree& t) {
  return d_distance_matrix(
      d_clique_graph(t.graph(), t.k(), std::vector<Clique>(t.registry().begin(), t.registry().end())));
}

DistanceMatrix extend_by_attachment(const DistanceMatrix& d, AttachmentStep step, int k) {
  if (k < 1) throw std::invalid_argument("extend_by_attachment: k must be >= 1");
  const Index s = d.order();
  if (step.target < 1 || static_cast<Index>(step.target) > s) {
    throw std::invalid_argument("extend_by_attachment: label " + std::to_string(step.target) +
                                " outside 1.." + std::to_string(s));
  }
  const Index i = static_cast<Index>(step.target) - 1;
  IntMatrix m(s + k, s + k);
  m.topLeftCorner(s, s) = d.entries();
  for (Index r = 0; r < s; ++r) {
    const BigInt via = d(r, i) + BigInt(1);
    for (Index c = s; c < s + k; ++c) m(r, c) = m(c, r) = via;
  }
  m.bottomRightCorner(k, k) = ones_minus_identity(k);
  return DistanceMatrix(std::move(m));
}

DistanceMatrix recursive_distance_matrix(const KTree& t) {
  if (t.order() == static_cast<std::size_t>(t.k())) {
    throw std::invalid_argument("recursive_distance_matrix: needs at least k+1 vertices");
  }
  DistanceMatrix d(ones_minus_identity(t.k() + 1));
  for (const AttachmentStep& step : t.trace()) d = extend_by_attachment(d, step, t.k());
  return DistanceMatrix(d.entries(), std::vector<Clique>(t.registry().begin(), t.registry().end()));
}

namespace {

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> rho) {
  const std::size_t n = rho.size();
  std::vector<std::size_t> inverse(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i] < 1 || rho[i] > n || inverse[rho[i] - 1] != 0) {
      throw std::invalid_argument("permutation is not a bijection on 1.." + std::to_string(n));
    }
    inverse[rho[i] - 1] = i + 1;
  }
  return inverse;
}

}  // namespace

IntMatrix permutation_matrix(std::span<const std::size_t> rho) {
  const auto inverse = inverse_permutation(rho);
  const auto n = static_cast<Index>(rho.size());
  IntMatrix p = IntMatrix::Constant(n, n, BigInt(0));
  for (Index i = 0; i < n; ++i) p(i, static_cast<Index>(inverse[i]) - 1) = 1;
  return p;
}

DistanceMatrix permutation_conjugate(const DistanceMatrix& d, std::span<const std::size_t> rho) {
  if (static_cast<Index>(rho.size()) != d.order()) {
    throw std::invalid_argument("permutation_conjugate: permutation size differs from matrix order");
  }
  const auto inverse = inverse_permutation(rho);
  const Index n = d.order();
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      m(i, j) = d(static_cast<Index>(inverse[i]) - 1, static_cast<Index>(inverse[j]) - 1);
    }
  }
  std::vector<Clique> labels;
  if (!d.labels().empty()) {
    for (Index i = 0; i < n; ++i) labels.push_back(d.labels()[inverse[i] - 1]);
  }
  return DistanceMatrix(std::move(m), std::move(labels));
}

}  // namespace ktdist
