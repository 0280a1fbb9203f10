#pragma once

#include <optional>

#include <Eigen/Dense>

#include "sqc/ir.hpp"

namespace sqc {

using DenseOperator = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

struct LadderResult {
  cplx amp;
  int k;
};

enum class Ladder { Lower, Raise };

/// Single-ket ladder rule on a site of dimension m; nullopt is the zero vector.
std::optional<LadderResult> ladder_apply(Ladder op, int m, int k);

/// (-1)^g with g the fermionic occupancy strictly before site j.
int fermion_sign(const Shape& shape, const Occupation& k, std::size_t j);

/// Denotation of `e` applied to `psi`, with fermionic signs threaded through tensors.
StateVector apply(const Expr& e, const Shape& shape, const StateVector& psi);

/// Column k is apply(e, basis ket k).
DenseOperator to_matrix(const Expr& e, const Shape& shape, std::size_t limit = kDenseLimit);

/// exp(-i r H) by Hermitian eigendecomposition.
DenseOperator simulate(const DenseOperator& H, double r);

DenseVector to_dense(const StateVector& psi, std::size_t limit = kDenseLimit);
StateVector from_dense(const Shape& shape, const DenseVector& v, double tol = 0.0);

/// Largest singular value.
double spectral_norm(const DenseOperator& A);

/// Largest |eigenvalue| of a Hermitian matrix.
double hermitian_norm(const DenseOperator& A);

}  // namespace sqc
