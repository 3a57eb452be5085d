#include "ktdist/matrix.hpp"

#include <stdexcept>

namespace ktdist {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw std::invalid_argument("int_matrix: ragged rows");
    Index j = 0;
    for (long long v : row) m(i, j++) = BigInt(v);
    ++i;
  }
  return m;
}

IntMatrix ones_minus_identity(Index n) {
  IntMatrix m = IntMatrix::Constant(n, n, BigInt(1));
  for (Index i = 0; i < n; ++i) m(i, i) = BigInt(0);
  return m;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m = IntMatrix::Constant(a.rows() + b.rows(), a.cols() + b.cols(), BigInt(0));
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

}  // namespace ktdist
