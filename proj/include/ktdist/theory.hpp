#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ktdist/clique_metric.hpp"
#include "ktdist/ktree.hpp"
#include "ktdist/matrix.hpp"
#include "ktdist/smith.hpp"

namespace ktdist {

// Closed-form invariant factors of the k-distance matrix of any k-tree on n
// vertices:
//   n = k      : none (the 1x1 zero matrix)
//   n = k + 1  : 1 (k times), k                      -- SNF of J - I
//   n >= k + 2 : 1 ((k-1)(n-k)+2 times), k+1 (n-k-2 times), k(k+1)(n-k)
struct PredictedSpectrum {
  int k = 1;
  int n = 1;
  std::vector<BigInt> factors;
};

// Throws std::invalid_argument for k < 1 or n < k.
PredictedSpectrum predicted_snf(int k, int n);

// (-1)^{k(n-k)} k (k+1)^{n-k-1} (n-k). Throws std::invalid_argument unless
// k >= 1 and n >= k + 1.
BigInt predicted_det(int k, int n);

// M_k = -J_k - I_k, and its invariant factors 1 (k-1 times), k+1. For k = 1
// this is [-2] with the single factor 2.
IntMatrix mk_matrix(int k);
std::vector<BigInt> mk_snf(int k);

// Unimodular P, Q with P M_k Q = diag(1, ..., 1, k+1):
//   P = identity with last row (-k, ..., -k, 1)
//   Q = J - I in the first k-1 rows, last row (-(k-1), ..., -(k-1), -k)
// det P = 1 and det Q = (-1)^k. Throws std::invalid_argument for k < 2.
struct MkWitnesses {
  IntMatrix p;
  IntMatrix q;
};
MkWitnesses pm_qm_matrices(int k);

// Order m+1 matrix [[c, b 1^T], [b 1, a I_m]].
IntMatrix bordered_matrix(const BigInt& a, const BigInt& b, const BigInt& c, int m);

// Invariant factors of bordered_matrix(a, b, c, m) in closed form:
//   gcd(a,b,c), g/gcd(a,b,c), a (m-2 times), |a (ac - m b^2)| / g
// with g = gcd(a^2, b^2, ca, ba), arranged into a divisibility chain. When
// ac = m b^2 the last factor vanishes and the rank drops to m. det_sign is
// the sign of a^{m-1} (ac - m b^2). Throws std::invalid_argument for a = 0
// or m < 2.
Snf bordered_snf(const BigInt& a, const BigInt& b, const BigInt& c, int m);

// Replaces a list of nonnegative diagonal entries by the invariant factors
// of the diagonal matrix they form (gcd/lcm exchange), zeros dropped.
std::vector<BigInt> divisibility_chain(std::vector<BigInt> diagonal);

// [[0, 1^T, ..., 1^T], [1, M_k], ..., [1, M_k]] with n-k diagonal blocks;
// order k(n-k)+1. Throws std::invalid_argument unless k >= 1, n >= k + 2.
IntMatrix arrow_matrix(int k, int n);

// target += multiplier * source, on rows or on columns (0-based indices).
struct ElementaryOperation {
  enum class Axis { row, column };
  Axis axis = Axis::row;
  Index target = 0;
  Index source = 0;
  int multiplier = -1;

  friend bool operator==(const ElementaryOperation&, const ElementaryOperation&) = default;
};

void apply(const ElementaryOperation& op, IntMatrix& m);
// The unimodular matrix E with E*M (rows) or M*E (columns) equal to the
// operation applied to M.
IntMatrix operation_matrix(const ElementaryOperation& op, Index order);

// Raised when a matrix and a k-tree disagree with each other.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ArrowReduction {
  IntMatrix matrix;
  std::vector<ElementaryOperation> operations;
};

// Reduces D = D^k(t) to arrow_matrix(k, n) by elementary operations, going
// through the trace backwards: for each attachment the target clique's row
// and column are subtracted from the k rows and columns it created; last,
// the first row and column are subtracted from rows and columns 2..k+1.
// Uses 2k(n-k) operations. Throws ContractViolation when D does not fit t,
// std::invalid_argument when t has fewer than k+2 vertices.
ArrowReduction reduce_to_arrow(const DistanceMatrix& d, const KTree& t);

}  // namespace ktdist
