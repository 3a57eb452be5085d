#include "ktdist/theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ktdist {

PredictedSpectrum predicted_snf(int k, int n) {
  if (k < 1 || n < k) throw std::invalid_argument("predicted_snf: need k >= 1 and n >= k");
  PredictedSpectrum p{k, n, {}};
  if (n == k) return p;
  if (n == k + 1) {
    p.factors.assign(static_cast<std::size_t>(k), BigInt(1));
    p.factors.emplace_back(k);
    return p;
  }
  const int m = n - k;
  p.factors.assign(static_cast<std::size_t>((k - 1) * m + 2), BigInt(1));
  p.factors.insert(p.factors.end(), static_cast<std::size_t>(m - 2), BigInt(k + 1));
  p.factors.push_back(BigInt(k) * BigInt(k + 1) * BigInt(m));
  return p;
}

BigInt predicted_det(int k, int n) {
  if (k < 1 || n <= k) throw std::invalid_argument("predicted_det: need k >= 1 and n >= k + 1");
  const int m = n - k;
  BigInt value = BigInt(k) * pow(BigInt(k + 1), static_cast<unsigned>(m - 1)) * BigInt(m);
  const long long parity = static_cast<long long>(k) * m;
  return parity % 2 == 0 ? value : -value;
}

IntMatrix mk_matrix(int k) {
  if (k < 1) throw std::invalid_argument("mk_matrix: k must be >= 1");
  IntMatrix m = IntMatrix::Constant(k, k, BigInt(-1));
  for (Index i = 0; i < k; ++i) m(i, i) = BigInt(-2);
  return m;
}

std::vector<BigInt> mk_snf(int k) {
  if (k < 1) throw std::invalid_argument("mk_snf: k must be >= 1");
  std::vector<BigInt> f(static_cast<std::size_t>(k - 1), BigInt(1));
  f.emplace_back(k + 1);
  return f;
}

MkWitnesses pm_qm_matrices(int k) {
  if (k < 2) throw std::invalid_argument("pm_qm_matrices: k must be >= 2");
  IntMatrix p = IntMatrix::Identity(k, k);
  for (Index j = 0; j + 1 < k; ++j) p(k - 1, j) = BigInt(-k);
  IntMatrix q = ones_minus_identity(k);
  for (Index j = 0; j + 1 < k; ++j) q(k - 1, j) = BigInt(-(k - 1));
  q(k - 1, k - 1) = BigInt(-k);
  return {std::move(p), std::move(q)};
}

IntMatrix bordered_matrix(const BigInt& a, const BigInt& b, const BigInt& c, int m) {
  if (m < 1) throw std::invalid_argument("bordered_matrix: m must be >= 1");
  IntMatrix x = IntMatrix::Constant(m + 1, m + 1, BigInt(0));
  x(0, 0) = c;
  for (Index i = 1; i <= m; ++i) {
    x(0, i) = x(i, 0) = b;
    x(i, i) = a;
  }
  return x;
}

std::vector<BigInt> divisibility_chain(std::vector<BigInt> diagonal) {
  for (auto& x : diagonal) x = abs(x);
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      if (diagonal[i].is_zero()) std::swap(diagonal[i], diagonal[j]);
      if (diagonal[j].is_zero()) continue;
      BigInt g = gcd(diagonal[i], diagonal[j]);
      BigInt l = lcm(diagonal[i], diagonal[j]);
      diagonal[i] = std::move(g);
      diagonal[j] = std::move(l);
    }
  }
  std::erase_if(diagonal, [](const BigInt& x) { return x.is_zero(); });
  return diagonal;
}

Snf bordered_snf(const BigInt& a, const BigInt& b, const BigInt& c, int m) {
  if (a.is_zero()) throw std::invalid_argument("bordered_snf: a must be nonzero");
  if (m < 2) throw std::invalid_argument("bordered_snf: m must be >= 2");
  const BigInt first = gcd(gcd(a, b), c);
  const BigInt second_divisor = gcd(gcd(a * a, b * b), gcd(c * a, b * a));
  const BigInt core = a * c - BigInt(m) * b * b;

  std::vector<BigInt> diagonal{first, second_divisor / first};
  diagonal.insert(diagonal.end(), static_cast<std::size_t>(m - 2), abs(a));
  diagonal.push_back(abs(a * core) / second_divisor);

  Snf s;
  s.invariant_factors = divisibility_chain(std::move(diagonal));
  s.rank = static_cast<Index>(s.invariant_factors.size());
  const int a_sign = (m - 1) % 2 == 0 ? 1 : a.sign();
  s.det_sign = a_sign * core.sign();
  return s;
}

IntMatrix arrow_matrix(int k, int n) {
  if (k < 1 || n < k + 2) throw std::invalid_argument("arrow_matrix: need k >= 1 and n >= k + 2");
  const int blocks = n - k;
  const Index order = static_cast<Index>(k) * blocks + 1;
  IntMatrix x = IntMatrix::Constant(order, order, BigInt(0));
  const IntMatrix block = mk_matrix(k);
  for (Index i = 1; i < order; ++i) x(0, i) = x(i, 0) = BigInt(1);
  for (int b = 0; b < blocks; ++b) x.block(1 + b * k, 1 + b * k, k, k) = block;
  return x;
}

void apply(const ElementaryOperation& op, IntMatrix& m) {
  const BigInt factor(op.multiplier);
  if (op.axis == ElementaryOperation::Axis::row) {
    for (Index j = 0; j < m.cols(); ++j) m(op.target, j) += factor * m(op.source, j);
  } else {
    for (Index i = 0; i < m.rows(); ++i) m(i, op.target) += factor * m(i, op.source);
  }
}

IntMatrix operation_matrix(const ElementaryOperation& op, Index order) {
  IntMatrix e = IntMatrix::Identity(order, order);
  if (op.axis == ElementaryOperation::Axis::row) {
    e(op.target, op.source) += BigInt(op.multiplier);
  } else {
    e(op.source, op.target) += BigInt(op.multiplier);
  }
  return e;
}

ArrowReduction reduce_to_arrow(const DistanceMatrix& d, const KTree& t) {
  const int k = t.k();
  const int n = static_cast<int>(t.order());
  if (n < k + 2) throw std::invalid_argument("reduce_to_arrow: needs a k-tree with at least k+2 vertices");
  if (d.order() != static_cast<Index>(registry_size(k, n))) {
    throw ContractViolation("reduce_to_arrow: matrix order " + std::to_string(d.order()) +
                            " does not match registry size " + std::to_string(registry_size(k, n)));
  }

  ArrowReduction r{d.entries(), {}};
  auto record = [&r](ElementaryOperation op) {
    apply(op, r.matrix);
    r.operations.push_back(op);
  };
  const auto trace = t.trace();
  for (std::size_t step = trace.size(); step-- > 0;) {
    const Index source = static_cast<Index>(trace[step].target) - 1;
    const Index first_new = static_cast<Index>(k) + 1 + static_cast<Index>(step) * k;
    for (Index a = first_new; a < first_new + k; ++a) {
      if (d(a, source) != BigInt(1)) {
        throw ContractViolation("reduce_to_arrow: clique " + std::to_string(a + 1) +
                                " is not adjacent to its attachment clique " +
                                std::to_string(source + 1));
      }
    }
    for (Index a = first_new; a < first_new + k; ++a) {
      record({ElementaryOperation::Axis::row, a, source, -1});
    }
    for (Index a = first_new; a < first_new + k; ++a) {
      record({ElementaryOperation::Axis::column, a, source, -1});
    }
  }
  for (Index a = 1; a <= k; ++a) record({ElementaryOperation::Axis::row, a, 0, -1});
  for (Index a = 1; a <= k; ++a) record({ElementaryOperation::Axis::column, a, 0, -1});
  return r;
}

}  // namespace ktdist
