#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ktdist {

// Vertices are 0-based and contiguous within their graph.
using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// A strictly increasing set of vertices. Ordering is lexicographic on the
// member list, which is the order every clique listing in this library uses.
class Clique {
 public:
  Clique() = default;
  // Sorts; throws std::invalid_argument on repeated members.
  explicit Clique(std::vector<VertexId> members);

  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(VertexId v) const;
  bool is_subset_of(const Clique& other) const;

  // Concatenated vertex ids ("03"), or dash-separated ("3-12") when
  // `separated` is set; the latter is needed once ids exceed one digit.
  std::string label(bool separated = false) const;

  friend auto operator<=>(const Clique&, const Clique&) = default;
  friend bool operator==(const Clique&, const Clique&) = default;

 private:
  std::vector<VertexId> members_;
};

// Undirected simple graph on vertices 0..order-1. Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Throws std::invalid_argument on self-loops, duplicate edges or
  // endpoints outside 0..order-1. Edge orientation is irrelevant.
  SimpleGraph(std::size_t order, std::span<const Edge> edges);

  static SimpleGraph complete(std::size_t order);

  std::size_t order() const { return neighbors_.size(); }
  std::size_t size() const { return edge_count_; }
  bool adjacent(VertexId u, VertexId v) const { return matrix_[u * order() + v] != 0; }
  std::span<const VertexId> neighbors(VertexId v) const { return neighbors_[v]; }
  std::size_t degree(VertexId v) const { return neighbors_[v].size(); }
  // Sorted, each as (u, v) with u < v.
  std::vector<Edge> edges() const;

  bool is_clique(const Clique& c) const;
  bool is_connected() const;

  // Relabels vertex v as perm[v]; perm must be a permutation of 0..order-1.
  SimpleGraph permuted(std::span<const VertexId> perm) const;
  // Adds vertex order() adjacent to every vertex in `neighbors`.
  SimpleGraph with_vertex_joined_to(std::span<const VertexId> neighbors) const;

  // Labeled equality.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::uint8_t> matrix_;
  std::size_t edge_count_ = 0;
};

// All cliques with exactly `size` members, in lexicographic order.
// Throws std::invalid_argument unless 1 <= size <= g.order().
std::vector<Clique> enumerate_cliques(const SimpleGraph& g, std::size_t size);

}  // namespace ktdist
