#pragma once

#include <initializer_list>

#include <Eigen/Core>

#include "ktdist/bigint.hpp"

namespace ktdist {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;

// Row-major literal, e.g. int_matrix({{0, 1}, {1, 0}}).
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);

// J_n - I_n.
IntMatrix ones_minus_identity(Index n);

// Block-diagonal direct sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

}  // namespace ktdist
