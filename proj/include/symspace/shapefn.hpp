// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace symspace {

/// Values, gradients and Hessians of every basis function at one point.
struct ShapeEval {
  Eigen::VectorXd values;                 // m
  Eigen::MatrixXd gradients;              // m x d
  std::vector<Eigen::MatrixXd> hessians;  // m entries, each d x d
};

/// Tensor-product Lagrange basis of degree k on [0,1]^d with equispaced
/// nodes. Basis function i is attached to node i; nodes are ordered
/// lexicographically by multi-index (a_1, ..., a_d), a_1 slowest, so
/// i = sum_j a_j (k+1)^(d-j).
class ShapeSet {
 public:
  /// d in {1,2,3,4}, k in {1,2,3}; otherwise throws UnsupportedBasis.
  static ShapeSet tensor_lagrange(int d, int k);

  int dimension() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<Eigen::VectorXd>& nodes() const noexcept { return nodes_; }

  Eigen::VectorXd values(const Eigen::VectorXd& x) const;
  ShapeEval eval(const Eigen::VectorXd& x) const;

 private:
  ShapeSet(int d, int k);
  void check_point(const Eigen::VectorXd& x) const;

  int dim_;
  int degree_;
  std::vector<Eigen::VectorXd> nodes_;
  std::vector<std::vector<int>> multi_;  // per basis function, 1-D indices
};

}  // namespace symspace
