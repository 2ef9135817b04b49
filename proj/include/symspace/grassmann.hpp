// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Interpolation on the Grassmannian Gr(p, n) of p-planes in R^n.
//
// Points are n x p orthonormal bases; tangents at a base Ā₁ are horizontal
// n x p matrices Z (Ā₁ᵀ Z = 0). All operations work with n x p or p x p
// matrices, so interpolation costs O(n p²) per datum.

#include <optional>
#include <span>

#include "symspace/interpolation.hpp"
#include "symspace/matfun.hpp"
#include "symspace/shapefn.hpp"

namespace symspace::grass {

/// Subspace spanned by the columns of an orthonormal n x p basis.
class GrassPoint {
 public:
  /// Throws Shape unless 1 <= p < n and ||AᵀA - I||_F <= 1e-12.
  explicit GrassPoint(Mat basis);

  const Mat& basis() const noexcept { return basis_; }
  Eigen::Index n() const noexcept { return basis_.rows(); }
  Eigen::Index p() const noexcept { return basis_.cols(); }

 private:
  Mat basis_;
};

/// Horizontal tangent representative at a base point.
class GrassTangent {
 public:
  /// Throws NotHorizontal unless ||baseᵀZ||_F <= 1e-10 max(1, ||Z||_F).
  GrassTangent(Mat z, const GrassPoint& base);

  const Mat& matrix() const noexcept { return z_; }

 private:
  Mat z_;
};

/// Orthonormal basis of the column span via the polar factor; throws Rank
/// when the smallest singular value is below 1e-10 times the largest.
GrassPoint orthonormalize(const Mat& m);

/// Norm of the vector of principal angles between two subspaces.
double subspace_distance(const GrassPoint& v, const GrassPoint& w);

/// Ā₁ V cos(Θ) + U sin(Θ) with Z = U Θ Vᵀ.
GrassPoint grass_exp(const GrassPoint& base, const GrassTangent& z);

/// Factors of the thin SVD (I - Ā₁Ā₁ᵀ) A₁ (Ā₁ᵀA₁)⁻¹ = U Σ Vᵀ.
struct LogFactors {
  Mat u;
  Vec sigma;
  Mat v;
};

/// Throws CutLocus when cond(Ā₁ᵀA₁) > 1e12 (some principal angle is π/2).
LogFactors grass_log_factors(const GrassPoint& base, const GrassPoint& v);

/// U arctan(Σ) Vᵀ.
GrassTangent grass_log(const GrassPoint& base, const GrassPoint& v);

/// Chart about a base subspace with tangents stored as n x p matrices.
class GrassChart {
 public:
  using Point = GrassPoint;
  using Tangent = Mat;

  explicit GrassChart(GrassPoint base) : base_(std::move(base)) {}

  Mat to_tangent(const GrassPoint& v) const { return grass_log(base_, v).matrix(); }
  GrassPoint from_tangent(const Mat& z) const { return grass_exp(base_, GrassTangent(z, base_)); }
  const GrassPoint& base() const noexcept { return base_; }
  Mat zero_tangent() const { return Mat::Zero(base_.n(), base_.p()); }

 private:
  GrassPoint base_;
};

/// Interpolation in the chart about a fixed base subspace.
GrassPoint interpolate_grass(std::span<const GrassPoint> data, const ShapeSet& shapes,
                             const Eigen::VectorXd& x, const GrassPoint& base);

GrassPoint interpolate_grass_weighted(std::span<const GrassPoint> data,
                                      const Eigen::VectorXd& weights, const GrassPoint& base);

/// Karcher iteration, stopped when ||sum_i phi_i Z_i||_F <= tol. The initial base
/// defaults to the datum with the largest weight.
KarcherResult<GrassPoint> interpolate_grass_karcher(
    std::span<const GrassPoint> data, const ShapeSet& shapes, const Eigen::VectorXd& x,
    std::optional<GrassPoint> initial = std::nullopt, const KarcherOptions& options = {});

KarcherResult<GrassPoint> interpolate_grass_karcher_weighted(
    std::span<const GrassPoint> data, const Eigen::VectorXd& weights,
    std::optional<GrassPoint> initial = std::nullopt, const KarcherOptions& options = {});

}  // namespace symspace::grass
