#pragma once

// Independent oracles and hand-rolled generators shared by the test
// binaries. Nothing here calls into the code under test except for the
// plain data types (SimpleGraph, IntMatrix, BigInt).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ktdist/graph.hpp"
#include "ktdist/matrix.hpp"

namespace oracle {

using ktdist::BigInt;
using ktdist::Edge;
using ktdist::Index;
using ktdist::IntMatrix;
using ktdist::SimpleGraph;
using ktdist::VertexId;

inline std::vector<std::vector<bool>> adjacency(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Tries every bijection. Fine up to 8 vertices.
inline bool brute_isomorphic(const SimpleGraph& x, const SimpleGraph& y) {
  if (x.order() != y.order() || x.size() != y.size()) return false;
  const auto a = adjacency(x);
  const auto b = adjacency(y);
  std::vector<std::size_t> p(x.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (a[i][j] != b[p[i]][p[j]]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// All d-subsets of vertices that are pairwise adjacent, as sorted member
// lists in lexicographic order, found by scanning bitmasks.
inline std::vector<std::vector<VertexId>> cliques_by_bitmask(const SimpleGraph& g, int d) {
  const auto a = adjacency(g);
  const std::size_t n = g.order();
  std::vector<std::vector<VertexId>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (mask & (1u << v)) members.push_back(v);
    }
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!a[members[i]][members[j]]) {
          clique = false;
          break;
        }
      }
    }
    if (clique) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_clique_in(const std::vector<std::vector<bool>>& a, const std::vector<VertexId>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!a[s[i]][s[j]]) return false;
    }
  }
  return true;
}

// d-distances by Floyd-Warshall over the d-clique graph; two d-cliques are
// adjacent when their union has d+1 vertices and is itself a clique.
// Nodes come in the order given. Unreachable pairs are -1.
inline std::vector<std::vector<long long>> clique_distances(const SimpleGraph& g,
                                                            const std::vector<std::vector<VertexId>>& nodes) {
  const auto a = adjacency(g);
  const std::size_t m = nodes.size();
  constexpr long long inf = 1'000'000;
  std::vector<std::vector<long long>> dist(m, std::vector<long long>(m, inf));
  for (std::size_t i = 0; i < m; ++i) {
    dist[i][i] = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      std::vector<VertexId> u;
      std::set_union(nodes[i].begin(), nodes[i].end(), nodes[j].begin(), nodes[j].end(), std::back_inserter(u));
      if (u.size() == nodes[i].size() + 1 && is_clique_in(a, u)) dist[i][j] = 1;
    }
  }
  for (std::size_t via = 0; via < m; ++via) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][via] + dist[via][j]);
      }
    }
  }
  for (auto& row : dist) {
    for (auto& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return dist;
}

inline IntMatrix to_int_matrix(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<Index>(rows.size()), rows.empty() ? 0 : static_cast<Index>(rows[0].size()));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = BigInt(rows[i][j]);
  }
  return m;
}

// Determinant by Gaussian elimination over the rationals.
inline BigInt rational_det(const IntMatrix& m) {
  using boost::multiprecision::cpp_rational;
  const Index n = m.rows();
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a[i][j] = cpp_rational(m(i, j).rep());
  }
  cpp_rational det = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return BigInt(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (Index r = c + 1; r < n; ++r) {
      const cpp_rational f = a[r][c] / a[c][c];
      for (Index j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return BigInt(ktdist::BigInt::Rep(boost::multiprecision::numerator(det)));
}

// Rooted-tree encoding (AHU); a free tree is encoded from its center(s).
inline std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != parent) kids.push_back(ahu(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int v : leaves) {
      for (int w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    leaves = std::move(next);
  }
  std::string best;
  for (int c : leaves) {
    const std::string code = ahu(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

// Unlabeled trees on n vertices, counted by decoding every Pruefer
// sequence and deduplicating by center-rooted AHU codes.
inline std::size_t count_unlabeled_trees(int n) {
  if (n <= 2) return 1;
  std::set<std::string> codes;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg = degree;
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      adj[leaf].push_back(x);
      adj[x].push_back(leaf);
      --deg[leaf];
      --deg[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          adj[u].push_back(v);
          adj[v].push_back(u);
        }
      }
    }
    codes.insert(tree_code(adj));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return codes.size();
}

// Labeled k-trees grown by joining a new vertex to any k-clique, classes
// kept by brute-force isomorphism. Returns class counts for n = k+1..nmax.
inline std::vector<std::size_t> brute_ktree_counts(int k, int nmax) {
  std::vector<SimpleGraph> level{SimpleGraph::complete(static_cast<std::size_t>(k + 1))};
  std::vector<std::size_t> counts{1};
  for (int n = k + 2; n <= nmax; ++n) {
    std::vector<SimpleGraph> next;
    for (const SimpleGraph& g : level) {
      for (const auto& c : cliques_by_bitmask(g, k)) {
        SimpleGraph h = g.with_vertex_joined_to(c);
        bool seen = false;
        for (const SimpleGraph& r : next) {
          if (brute_isomorphic(r, h)) {
            seen = true;
            break;
          }
        }
        if (!seen) next.push_back(std::move(h));
      }
    }
    counts.push_back(next.size());
    level = std::move(next);
  }
  return counts;
}

// ---- generators -----------------------------------------------------------

using Rng = std::mt19937_64;

inline std::vector<VertexId> random_permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), VertexId{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline SimpleGraph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, edges);
}

inline IntMatrix random_matrix(Index rows, Index cols, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = BigInt(entry(rng));
  }
  return m;
}

// Product of random elementary operations (row adds, swaps, negations).
inline IntMatrix random_unimodular(Index n, int steps, Rng& rng) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n == 0) return u;
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  std::uniform_int_distribution<int> kind(0, 5);
  for (int s = 0; s < steps; ++s) {
    const Index i = pick(rng);
    const Index j = pick(rng);
    const int op = kind(rng);
    if (op == 0 && i != j) {
      u.row(i).swap(u.row(j));
    } else if (op == 1) {
      u.row(i) = -u.row(i);
    } else if (i != j) {
      const BigInt f(mult(rng));
      for (Index c = 0; c < n; ++c) u(i, c) += f * u(j, c);
    }
  }
  return u;
}

inline std::vector<BigInt> factors(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

// Figure-1 graph of the worked example.
inline SimpleGraph figure1_graph() {
  const std::vector<Edge> edges{{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {3, 5}};
  return SimpleGraph(6, edges);
}

inline IntMatrix figure1_d1() {
  return ktdist::int_matrix({{0, 1, 2, 1, 1, 1},
                             {1, 0, 2, 1, 2, 2},
                             {2, 2, 0, 1, 2, 1},
                             {1, 1, 1, 0, 1, 1},
                             {1, 2, 2, 1, 0, 2},
                             {1, 2, 1, 1, 2, 0}});
}

inline IntMatrix figure1_d2() {
  return ktdist::int_matrix({{0, 1, 2, 2, 1, 3, 3, 2, 2},
                             {1, 0, 1, 1, 1, 2, 2, 1, 1},
                             {2, 1, 0, 2, 2, 3, 3, 1, 2},
                             {2, 1, 2, 0, 2, 2, 2, 2, 1},
                             {1, 1, 2, 2, 0, 3, 3, 2, 2},
                             {3, 2, 3, 2, 3, 0, 1, 3, 1},
                             {3, 2, 3, 2, 3, 1, 0, 3, 1},
                             {2, 1, 1, 2, 2, 3, 3, 0, 2},
                             {2, 1, 2, 1, 2, 1, 1, 2, 0}});
}

inline const std::vector<std::string>& figure1_d2_labels() {
  static const std::vector<std::string> labels{"01", "03", "04", "05", "13", "23", "25", "34", "35"};
  return labels;
}

// Figure-2 example: right labeling, permutation, left labeling.
inline IntMatrix figure2_right() {
  return ktdist::int_matrix(
      {{0, 1, 1, 1, 1}, {1, 0, 1, 2, 2}, {1, 1, 0, 2, 2}, {1, 2, 2, 0, 1}, {1, 2, 2, 1, 0}});
}

inline std::vector<std::size_t> figure2_rho() { return {4, 1, 5, 3, 2}; }

inline IntMatrix figure2_left() {
  return ktdist::int_matrix(
      {{0, 2, 2, 1, 1}, {2, 0, 1, 1, 2}, {2, 1, 0, 1, 2}, {1, 1, 1, 0, 1}, {1, 2, 2, 1, 0}});
}

// Permutation matrix as printed: rows e2, e5, e4, e1, e3.
inline IntMatrix figure2_p() {
  return ktdist::int_matrix(
      {{0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}});
}

inline IntMatrix figure2_p_inverse() {
  return ktdist::int_matrix(
      {{0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}});
}

}  // namespace oracle
