// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace symspace::grass {

namespace {

constexpr double kCutLocusCondition = 1e12;

}  // namespace

GrassPoint::GrassPoint(Mat basis) : basis_(std::move(basis)) {
  const Eigen::Index n = basis_.rows();
  const Eigen::Index p = basis_.cols();
  if (p < 1 || p >= n) {
    std::ostringstream os;
    os << "GrassPoint: need 1 <= p < n, got n=" << n << ", p=" << p;
    throw Error(ErrorKind::Shape, os.str());
  }
  if (!basis_.allFinite()) throw Error(ErrorKind::Shape, "GrassPoint: non-finite entry");
  const double defect = (basis_.transpose() * basis_ - Mat::Identity(p, p)).norm();
  if (defect > 1e-12) {
    std::ostringstream os;
    os << "GrassPoint: columns are not orthonormal (||A^T A - I||_F = " << defect << ")";
    throw Error(ErrorKind::Shape, os.str());
  }
}

GrassTangent::GrassTangent(Mat z, const GrassPoint& base) : z_(std::move(z)) {
  if (z_.rows() != base.n() || z_.cols() != base.p()) {
    throw Error(ErrorKind::Shape, "GrassTangent: shape differs from base");
  }
  const double defect = (base.basis().transpose() * z_).norm();
  if (defect > 1e-10 * std::max(1.0, z_.norm())) {
    std::ostringstream os;
    os << "||base^T Z||_F = " << defect;
    throw Error(ErrorKind::NotHorizontal, os.str());
  }
}

GrassPoint orthonormalize(const Mat& m) {
  if (m.cols() < 1 || m.rows() <= m.cols()) {
    throw Error(ErrorKind::Shape, "orthonormalize: need an n x p matrix with 1 <= p < n");
  }
  const ThinSvd svd = thin_svd(m);
  const double top = svd.sigma(0);
  const double bottom = svd.sigma(svd.sigma.size() - 1);
  if (!(top > 0.0) || bottom <= 1e-10 * top) {
    std::ostringstream os;
    os << "orthonormalize: rank deficient (singular values " << top << " .. " << bottom << ")";
    throw Error(ErrorKind::Rank, os.str());
  }
  return GrassPoint(svd.u * svd.v.transpose());
}

double subspace_distance(const GrassPoint& v, const GrassPoint& w) {
  if (v.n() != w.n() || v.p() != w.p()) {
    throw Error(ErrorKind::Shape, "subspace_distance: dimension mismatch");
  }
  // Cosines from VᵀW and sines from the component of W orthogonal to V; atan2
  // keeps small and near-π/2 angles accurate.
  const Mat cross = v.basis().transpose() * w.basis();
  const Vec cosines = thin_svd(cross).sigma;                        // descending
  const Vec sines = thin_svd(w.basis() - v.basis() * cross).sigma;  // descending
  const Eigen::Index p = cosines.size();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p; ++i) {
    const double theta = std::atan2(sines(p - 1 - i), std::clamp(cosines(i), 0.0, 1.0));
    sum += theta * theta;
  }
  return std::sqrt(sum);
}

GrassPoint grass_exp(const GrassPoint& base, const GrassTangent& z) {
  const Mat& zm = z.matrix();
  if (zm.rows() != base.n() || zm.cols() != base.p()) {
    throw Error(ErrorKind::Shape, "grass_exp: tangent shape differs from base");
  }
  const ThinSvd svd = thin_svd(zm);
  const Vec c = svd.sigma.array().cos();
  const Vec s = svd.sigma.array().sin();
  return GrassPoint(base.basis() * svd.v * c.asDiagonal() + svd.u * s.asDiagonal());
}

LogFactors grass_log_factors(const GrassPoint& base, const GrassPoint& v) {
  if (v.n() != base.n() || v.p() != base.p()) {
    throw Error(ErrorKind::Shape, "grass_log: dimension mismatch");
  }
  const Mat& abar = base.basis();
  const Mat& a1 = v.basis();
  const Mat m = abar.transpose() * a1;
  const Vec sv = thin_svd(m).sigma;
  const double smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || sv(0) / smin > kCutLocusCondition) {
    std::ostringstream os;
    os << "base^T A1 is singular or ill-conditioned (singular values " << sv(0) << " .. " << smin
       << ")";
    throw Error(ErrorKind::CutLocus, os.str());
  }
  const Mat k = (a1 - abar * m) * m.partialPivLu().inverse();
  ThinSvd svd = thin_svd(k);
  return {std::move(svd.u), std::move(svd.sigma), std::move(svd.v)};
}

GrassTangent grass_log(const GrassPoint& base, const GrassPoint& v) {
  const LogFactors f = grass_log_factors(base, v);
  const Vec theta = f.sigma.array().atan();
  return GrassTangent(f.u * theta.asDiagonal() * f.v.transpose(), base);
}

GrassPoint interpolate_grass(std::span<const GrassPoint> data, const ShapeSet& shapes,
                             const Eigen::VectorXd& x, const GrassPoint& base) {
  const InterpolationProblem<GrassPoint> problem{data, shapes, x};
  return interpolate(problem, GrassChart(base));
}

GrassPoint interpolate_grass_weighted(std::span<const GrassPoint> data,
                                      const Eigen::VectorXd& weights, const GrassPoint& base) {
  return interpolate_weighted(data, weights, GrassChart(base));
}

KarcherResult<GrassPoint> interpolate_grass_karcher_weighted(std::span<const GrassPoint> data,
                                                             const Eigen::VectorXd& weights,
                                                             std::optional<GrassPoint> initial,
                                                             const KarcherOptions& options) {
  if (data.empty()) throw Error(ErrorKind::Shape, "interpolation needs at least one datum");
  if (static_cast<Eigen::Index>(data.size()) != weights.size()) {
    throw Error(ErrorKind::Shape, "weight count does not match data count");
  }
  GrassPoint start = initial ? std::move(*initial) : data[largest_weight_index(weights)];
  return interpolate_karcher_weighted<GrassPoint>(
      data, weights, [](const GrassPoint& b) { return GrassChart(b); }, std::move(start), options);
}

KarcherResult<GrassPoint> interpolate_grass_karcher(std::span<const GrassPoint> data,
                                                    const ShapeSet& shapes,
                                                    const Eigen::VectorXd& x,
                                                    std::optional<GrassPoint> initial,
                                                    const KarcherOptions& options) {
  const InterpolationProblem<GrassPoint> problem{data, shapes, x};
  check_problem(problem);
  return interpolate_grass_karcher_weighted(data, shapes.values(x), std::move(initial), options);
}

}  // namespace symspace::grass
