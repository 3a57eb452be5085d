#include "ktdist/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "ktdist/graph_io.hpp"

namespace ktdist {

namespace {

using Cell = std::vector<VertexId>;
using Partition = std::vector<Cell>;
using Code = std::vector<std::uint64_t>;

// Splits cells by neighbour counts into every other cell until stable.
// Sub-cells are ordered by their count signature, so the result depends only
// on the graph structure and the incoming ordered partition.
void refine(const SimpleGraph& g, Partition& cells) {
  std::vector<std::size_t> cell_of(g.order());
  for (;;) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (VertexId v : cells[c]) cell_of[v] = c;
    }
    Partition next;
    next.reserve(g.order());
    bool split = false;
    for (const Cell& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::uint32_t>, VertexId>> keyed;
      keyed.reserve(cell.size());
      for (VertexId v : cell) {
        std::vector<std::uint32_t> counts(cells.size(), 0);
        for (VertexId u : g.neighbors(v)) ++counts[cell_of[u]];
        keyed.emplace_back(std::move(counts), v);
      }
      std::sort(keyed.begin(), keyed.end());
      Cell current{keyed.front().second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(current));
          current.clear();
          split = true;
        }
        current.push_back(keyed[i].second);
      }
      next.push_back(std::move(current));
    }
    cells = std::move(next);
    if (!split) return;
  }
}

Code encode(const SimpleGraph& g, const std::vector<VertexId>& at_position) {
  const std::size_t n = g.order();
  Code code((n * n / 2 + 63) / 64 + 1, 0);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(at_position[i], at_position[j])) code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    }
  }
  return code;
}

class LabelingSearch {
 public:
  explicit LabelingSearch(const SimpleGraph& g) : g_(g), parent_(g.order()) {}

  std::vector<VertexId> run() {
    Partition start;
    if (g_.order() > 0) {
      Cell all(g_.order());
      std::iota(all.begin(), all.end(), VertexId{0});
      start.push_back(std::move(all));
    }
    visit(std::move(start));
    return best_label_;
  }

 private:
  void visit(Partition cells) {
    refine(g_, cells);
    const auto target = std::find_if(cells.begin(), cells.end(),
                                     [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    const Cell candidates = cells[t];
    std::vector<VertexId> explored;
    for (VertexId v : candidates) {
      if (!explored.empty() && shares_orbit(v, explored)) continue;
      explored.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({v});
      Cell rest;
      for (VertexId u : cells[t]) {
        if (u != v) rest.push_back(u);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      prefix_.push_back(v);
      visit(std::move(child));
      prefix_.pop_back();
    }
  }

  void leaf(const Partition& cells) {
    std::vector<VertexId> at_position(cells.size());
    std::vector<VertexId> label(cells.size());
    for (std::size_t p = 0; p < cells.size(); ++p) {
      at_position[p] = cells[p].front();
      label[cells[p].front()] = static_cast<VertexId>(p);
    }
    Code code = encode(g_, at_position);
    if (!best_) {
      first_ = best_ = code;
      first_label_ = best_label_ = label;
      return;
    }
    if (code == *first_) record_automorphism(first_label_, label);
    if (code == *best_) {
      record_automorphism(best_label_, label);
    } else if (code < *best_) {
      best_ = std::move(code);
      best_label_ = std::move(label);
    }
  }

  // gamma = reference^{-1} o label maps the graph onto itself.
  void record_automorphism(const std::vector<VertexId>& reference, const std::vector<VertexId>& label) {
    std::vector<VertexId> inverse(reference.size());
    for (VertexId v = 0; v < reference.size(); ++v) inverse[reference[v]] = v;
    std::vector<VertexId> gamma(label.size());
    bool identity = true;
    for (VertexId v = 0; v < label.size(); ++v) {
      gamma[v] = inverse[label[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current prefix pointwise. Sibling subtrees in one orbit hold the same
  // leaf codes, so only one of them needs a visit.
  bool shares_orbit(VertexId v, const std::vector<VertexId>& explored) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
    auto find = [this](VertexId x) {
      while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      const bool fixes_prefix = std::all_of(prefix_.begin(), prefix_.end(),
                                            [&](VertexId p) { return gamma[p] == p; });
      if (!fixes_prefix) continue;
      for (VertexId x = 0; x < gamma.size(); ++x) {
        const VertexId a = find(x), b = find(gamma[x]);
        if (a != b) parent_[a] = b;
      }
    }
    const VertexId root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](VertexId e) { return find(e) == root; });
  }

  const SimpleGraph& g_;
  std::vector<VertexId> prefix_;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> generators_;
  std::optional<Code> first_, best_;
  std::vector<VertexId> first_label_, best_label_;
};

}  // namespace

std::vector<VertexId> canonical_labeling(const SimpleGraph& g) {
  return LabelingSearch(g).run();
}

CanonicalForm canonical_form(const SimpleGraph& g) {
  return {to_graph6(g.permuted(canonical_labeling(g)))};
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace ktdist
