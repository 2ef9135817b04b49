// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Chart-generic interpolation on a symmetric space.
//
// A chart pairs to_tangent (local log coordinates about a base point) with its
// inverse from_tangent. The interpolant at x is
//
//     from_tangent( sum_i phi_i(x) to_tangent(u_i) ),
//
// and the Karcher variant re-centers the chart at the current interpolant until
// the weighted tangent sum vanishes.

#include <concepts>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symspace/error.hpp"
#include "symspace/shapefn.hpp"

namespace symspace {

template <typename C>
concept Chart = requires(const C& chart, const typename C::Point& point,
                         const typename C::Tangent& tangent, double scalar) {
  { chart.to_tangent(point) } -> std::convertible_to<typename C::Tangent>;
  { chart.from_tangent(tangent) } -> std::convertible_to<typename C::Point>;
  { chart.base() } -> std::convertible_to<typename C::Point>;
  { chart.zero_tangent() } -> std::convertible_to<typename C::Tangent>;
  { tangent + tangent } -> std::convertible_to<typename C::Tangent>;
  { scalar * tangent } -> std::convertible_to<typename C::Tangent>;
  { tangent.norm() } -> std::convertible_to<double>;
};

/// A chart whose points are realized as matrices: ambient_value(t) is the
/// matrix of from_tangent(t), and the differentials are its first and second
/// derivatives along affine tangent paths.
template <typename C>
concept DifferentiableChart = Chart<C> && requires(const C& chart, const typename C::Tangent& t) {
  { chart.ambient_value(t) } -> std::convertible_to<Eigen::MatrixXd>;
  { chart.differential(t, t) } -> std::convertible_to<Eigen::MatrixXd>;
  { chart.second_differential(t, t, t, t) } -> std::convertible_to<Eigen::MatrixXd>;
};

template <typename Point>
struct InterpolationProblem {
  std::span<const Point> data;
  const ShapeSet& shapes;
  Eigen::VectorXd x;
};

/// to_tangent of every datum; a chart-domain failure is rethrown as a
/// DatumError carrying the datum index.
template <Chart C>
std::vector<typename C::Tangent> tangents_of(std::span<const typename C::Point> data,
                                             const C& chart) {
  std::vector<typename C::Tangent> out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    try {
      out.push_back(chart.to_tangent(data[i]));
    } catch (const DatumError&) {
      throw;
    } catch (const Error& e) {
      throw DatumError(e.kind(), i, e.what());
    }
  }
  return out;
}

template <typename Tangent>
Tangent weighted_sum(std::span<const Tangent> tangents, const Eigen::VectorXd& weights,
                     Tangent zero) {
  if (static_cast<Eigen::Index>(tangents.size()) != weights.size()) {
    throw Error(ErrorKind::Shape, "weight count does not match data count");
  }
  // Index order, for reproducible accumulation.
  for (std::size_t i = 0; i < tangents.size(); ++i) {
    zero = zero + weights(static_cast<Eigen::Index>(i)) * tangents[i];
  }
  return zero;
}

template <Chart C>
typename C::Point interpolate_weighted(std::span<const typename C::Point> data,
                                       const Eigen::VectorXd& weights, const C& chart) {
  const auto tangents = tangents_of(data, chart);
  return chart.from_tangent(
      weighted_sum<typename C::Tangent>(tangents, weights, chart.zero_tangent()));
}

template <typename Point>
void check_problem(const InterpolationProblem<Point>& problem) {
  if (static_cast<int>(problem.data.size()) != problem.shapes.size()) {
    throw Error(ErrorKind::Shape, "data count does not match shape-set size");
  }
  if (problem.x.size() != problem.shapes.dimension()) {
    throw Error(ErrorKind::Shape, "query point dimension does not match shape set");
  }
}

template <Chart C>
typename C::Point interpolate(const InterpolationProblem<typename C::Point>& problem,
                              const C& chart) {
  check_problem(problem);
  return interpolate_weighted(problem.data, problem.shapes.values(problem.x), chart);
}

/// Value and ambient derivatives of the interpolant at one point.
struct InterpolantJet {
  Eigen::MatrixXd value;
  std::vector<Eigen::MatrixXd> first;                // d entries
  std::vector<std::vector<Eigen::MatrixXd>> second;  // d x d entries, symmetric
};

/// Jet from precomputed tangents and shape data; P, dP/dx_j and d2P/dx_j dx_k
/// are combined with the chart's differentials.
template <DifferentiableChart C>
InterpolantJet jet_from_tangents(std::span<const typename C::Tangent> tangents,
                                 const ShapeEval& shape, const C& chart, bool with_second = true) {
  using Tangent = typename C::Tangent;
  const Eigen::Index d = shape.gradients.cols();
  const Tangent p = weighted_sum<Tangent>(tangents, shape.values, chart.zero_tangent());
  std::vector<Tangent> dp;
  dp.reserve(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    dp.push_back(weighted_sum<Tangent>(tangents, shape.gradients.col(j), chart.zero_tangent()));
  }

  InterpolantJet jet;
  jet.value = chart.ambient_value(p);
  for (Eigen::Index j = 0; j < d; ++j) jet.first.push_back(chart.differential(p, dp[j]));
  if (!with_second) return jet;

  jet.second.assign(d, std::vector<Eigen::MatrixXd>(d));
  Eigen::VectorXd hess_weights(static_cast<Eigen::Index>(tangents.size()));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j; k < d; ++k) {
      for (std::size_t i = 0; i < tangents.size(); ++i) {
        hess_weights(static_cast<Eigen::Index>(i)) = shape.hessians[i](j, k);
      }
      const Tangent d2p = weighted_sum<Tangent>(tangents, hess_weights, chart.zero_tangent());
      jet.second[j][k] = chart.second_differential(p, dp[j], dp[k], d2p);
      if (k != j) jet.second[k][j] = jet.second[j][k];
    }
  }
  return jet;
}

template <DifferentiableChart C>
InterpolantJet interpolate_jet(const InterpolationProblem<typename C::Point>& problem,
                               const C& chart) {
  check_problem(problem);
  const auto tangents = tangents_of(problem.data, chart);
  return jet_from_tangents<C>(tangents, problem.shapes.eval(problem.x), chart);
}

template <DifferentiableChart C>
Eigen::MatrixXd interpolate_derivative(const InterpolationProblem<typename C::Point>& problem,
                                       const C& chart, int direction) {
  check_problem(problem);
  if (direction < 0 || direction >= problem.shapes.dimension()) {
    throw Error(ErrorKind::Shape, "derivative direction out of range");
  }
  const auto tangents = tangents_of(problem.data, chart);
  return jet_from_tangents<C>(tangents, problem.shapes.eval(problem.x), chart, false)
      .first[direction];
}

template <DifferentiableChart C>
Eigen::MatrixXd interpolate_second_derivative(
    const InterpolationProblem<typename C::Point>& problem, const C& chart, int dir_j, int dir_k) {
  check_problem(problem);
  const int d = problem.shapes.dimension();
  if (dir_j < 0 || dir_j >= d || dir_k < 0 || dir_k >= d) {
    throw Error(ErrorKind::Shape, "derivative direction out of range");
  }
  return interpolate_jet(problem, chart).second[dir_j][dir_k];
}

struct KarcherOptions {
  double tol = 1e-12;
  int max_iter = 100;
  /// Return the iterate reached after max_iter re-centerings instead of
  /// throwing KarcherDivergence.
  bool truncate = false;
};

template <typename Point>
struct KarcherResult {
  Point point;
  int iterations = 0;  // re-centerings performed
  double residual = 0.0;
  bool converged = false;
};

/// Index of the largest weight; the default initial base for the Karcher
/// iteration.
inline std::size_t largest_weight_index(const Eigen::VectorXd& weights) {
  Eigen::Index imax = 0;
  weights.maxCoeff(&imax);
  return static_cast<std::size_t>(imax);
}

/// Fixed-point iteration for sum_i phi_i to_tangent_{base}(u_i) = 0: each step
/// replaces base by the interpolant computed in the chart at base.
/// make_chart(base) must return a Chart whose Point type matches.
template <typename Point, typename ChartFactory>
  requires Chart<std::invoke_result_t<ChartFactory&, const Point&>>
KarcherResult<Point> interpolate_karcher_weighted(std::span<const Point> data,
                                                  const Eigen::VectorXd& weights,
                                                  ChartFactory&& make_chart, Point initial,
                                                  const KarcherOptions& options = {}) {
  using C = std::invoke_result_t<ChartFactory&, const Point&>;
  using Tangent = typename C::Tangent;
  Point base = std::move(initial);
  for (int it = 0;; ++it) {
    const C chart = make_chart(base);
    const auto tangents = tangents_of(data, chart);
    const Tangent p = weighted_sum<Tangent>(tangents, weights, chart.zero_tangent());
    const double residual = p.norm();
    if (residual <= options.tol) return {std::move(base), it, residual, true};
    if (it >= options.max_iter) {
      if (options.truncate) return {std::move(base), it, residual, false};
      throw KarcherDivergence(residual, it);
    }
    base = chart.from_tangent(p);
  }
}

template <typename Point, typename ChartFactory>
KarcherResult<Point> interpolate_karcher(const InterpolationProblem<Point>& problem,
                                         ChartFactory&& make_chart, Point initial,
                                         const KarcherOptions& options = {}) {
  check_problem(problem);
  return interpolate_karcher_weighted<Point>(problem.data, problem.shapes.values(problem.x),
                                             std::forward<ChartFactory>(make_chart),
                                             std::move(initial), options);
}

}  // namespace symspace
