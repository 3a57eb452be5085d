#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ktdist/graph.hpp"
#include "ktdist/ktree.hpp"
#include "ktdist/matrix.hpp"

namespace ktdist {

// Raised when some pair of d-cliques is joined by no d-walk.
class NotConnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d-cliques of a graph, two of them adjacent when they lie in a common
// (d+1)-clique. Several shared (d+1)-cliques still give a single adjacency.
struct DCliqueGraph {
  int d = 1;
  std::vector<Clique> nodes;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour indices

  bool adjacent(std::size_t i, std::size_t j) const;
  bool is_connected() const;
};

// Nodes in lexicographic order. Throws std::invalid_argument unless
// 1 <= d <= g.order().
DCliqueGraph d_clique_graph(const SimpleGraph& g, int d);
// Nodes in the given order, which must list every d-clique of g exactly once.
DCliqueGraph d_clique_graph(const SimpleGraph& g, int d, std::vector<Clique> nodes);

// Symmetric, zero diagonal, off-diagonal entries >= 1. Labels are optional;
// when present there is one per row.
class DistanceMatrix {
 public:
  // Throws std::invalid_argument when the entries break the shape invariants.
  explicit DistanceMatrix(IntMatrix entries, std::vector<Clique> labels = {});

  Index order() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  const BigInt& operator()(Index i, Index j) const { return entries_(i, j); }
  std::span<const Clique> labels() const { return labels_; }

  bool satisfies_triangle_inequality() const;

  // Entries only; labels are metadata.
  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.order() == b.order() && a.entries_ == b.entries_;
  }

 private:
  IntMatrix entries_;
  std::vector<Clique> labels_;
};

// Breadth-first distances between the nodes of h, labeled by its nodes.
// Throws NotConnectedError when h is disconnected.
DistanceMatrix d_distance_matrix(const DCliqueGraph& h);
// Lexicographically indexed d-distance matrix of g.
DistanceMatrix d_distance_matrix(const SimpleGraph& g, int d);
// k-distance matrix of t indexed by its registry.
DistanceMatrix k_distance_matrix(const KTree& t);

// Appends k rows/columns for an attachment through the clique labeled
// step.target: each new row is that clique's row plus one, and the new
// diagonal block is J_k - I_k. Throws std::invalid_argument for labels
// outside 1..order or k < 1.
DistanceMatrix extend_by_attachment(const DistanceMatrix& d, AttachmentStep step, int k);

// Folds extend_by_attachment over t's trace from J_{k+1} - I_{k+1}; the
// result carries t's registry as labels. Throws std::invalid_argument for
// the single-clique tree.
DistanceMatrix recursive_distance_matrix(const KTree& t);

// P with P(i, j) = [rho^{-1}(i) == j], rho given as its 1-based image list
// (rho[i - 1] = rho(i)). Throws std::invalid_argument unless rho is a
// bijection on 1..size.
IntMatrix permutation_matrix(std::span<const std::size_t> rho);

// P D P^{-1}: entry (i, j) is D(rho^{-1}(i), rho^{-1}(j)). Labels follow
// their rows.
DistanceMatrix permutation_conjugate(const DistanceMatrix& d, std::span<const std::size_t> rho);

}  // namespace ktdist
