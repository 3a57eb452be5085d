#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ktdist/graph.hpp"

namespace ktdist {

// Relabeling-invariant encoding: equal iff the graphs are isomorphic.
// The bytes are the graph6 string of the graph under its canonical labeling.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// canonical_labeling(g)[v] is the canonical position of vertex v.
std::vector<VertexId> canonical_labeling(const SimpleGraph& g);

CanonicalForm canonical_form(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace ktdist
