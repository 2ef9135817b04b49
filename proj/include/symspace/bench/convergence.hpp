// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Elementwise interpolation of a metric field on a uniform N x N x N grid of
// cubes covering {t} x [lo, hi]^3, with tensor Gauss–Legendre quadrature of the
// L² and H¹ errors and a per-point signature census.

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symspace/bench/metric.hpp"
#include "symspace/interpolation.hpp"

namespace symspace::bench {

enum class Scheme { Symspace, Componentwise, Karcher };

std::string_view to_string(Scheme scheme);

struct Region {
  double t = 0.0;
  std::array<double, 3> lo{2.0, 2.0, 2.0};
  std::array<double, 3> hi{3.0, 3.0, 3.0};
};

/// One (N, k) run.
struct GridSpec {
  Region region;
  int n = 2;
  int degree = 1;
  Scheme scheme = Scheme::Symspace;
  int quad = 4;  // Gauss points per axis
  KarcherOptions karcher;
};

/// Throws Shape when N < 1, k not in {1, 2}, or q < 1.
void validate(const GridSpec& spec);

struct ElementDiagnostics {
  std::array<int, 3> index{};
  double l2_sq = 0.0;
  double h1_sq = 0.0;
  bool failed = false;
  std::string error;
  int karcher_iterations_max = 0;
  double karcher_iterations_mean = 0.0;
};

struct ConvergenceRow {
  int n = 0;
  double l2_error = 0.0;
  std::optional<double> l2_order;
  double h1_error = 0.0;
  std::optional<double> h1_order;
  int failed_elements = 0;
  std::vector<ElementDiagnostics> elements;  // lexicographic (ix, iy, iz)
};

struct ConvergenceBlock {
  int degree = 1;
  std::vector<ConvergenceRow> rows;
};

struct ConvergenceStudy {
  Region region;
  std::vector<int> ns{2, 4, 8, 16};
  std::vector<int> degrees{1, 2};
  Scheme scheme = Scheme::Symspace;
  int quad = 4;
  KarcherOptions karcher;
};

struct ConvergenceReport {
  std::string metric;
  Scheme scheme = Scheme::Symspace;
  int quad = 4;
  std::vector<ConvergenceBlock> blocks;

  int failed_elements() const;
};

/// Errors for one (N, k); throws Shape when q < k + 1. Interpolation failures inside an element are
/// recorded in its diagnostics and the element is left out of the sums;
/// failures evaluating the metric itself propagate.
ConvergenceRow measure_errors(const GridSpec& spec, const MetricField& metric);

/// Orders log2(e_N / e_2N) are attached to the row of 2N when the previous row
/// has half its N.
ConvergenceReport run_convergence(const ConvergenceStudy& study, const MetricField& metric);

struct CensusTable {
  std::string metric;
  Scheme scheme = Scheme::Symspace;
  int n = 2;
  int degree = 1;
  int quad = 2;
  /// "(pos,neg)" → count; "degenerate" for numerically singular points and
  /// "error:<kind>" for interpolation failures.
  std::map<std::string, int> counts;

  int total() const;
  int count(const std::string& key) const;
};

CensusTable run_signature_census(const GridSpec& spec, const MetricField& metric);

/// Interpolant of one element's nodal data at a reference point of [0,1]^3,
/// by the chosen scheme; exposed for tests.
class ElementInterpolant {
 public:
  ElementInterpolant(const GridSpec& spec, const MetricField& metric, std::array<int, 3> index);

  const std::vector<sig::SigMatrix>& nodal() const noexcept { return nodal_; }
  const ShapeSet& shapes() const noexcept { return shapes_; }
  Point4 physical(const Eigen::Vector3d& ref) const;

  /// Value only.
  Mat value(const Eigen::Vector3d& ref) const;
  /// Value and physical first derivatives in (x, y, z).
  InterpolantJet jet(const Eigen::Vector3d& ref) const;
  /// As above with the shape functions already evaluated at ref.
  InterpolantJet jet(const Eigen::Vector3d& ref, const ShapeEval& shape) const;
  int last_karcher_iterations() const noexcept { return last_iterations_; }

 private:
  sig::SigMatrix karcher_point(const Eigen::VectorXd& weights,
                               const std::optional<sig::SigMatrix>& initial) const;

  GridSpec spec_;
  ShapeSet shapes_;
  std::array<double, 3> origin_{};
  std::array<double, 3> size_{};
  std::vector<sig::SigMatrix> nodal_;
  std::vector<Mat> tangents_;  // log(J L_i), symspace scheme
  mutable int last_iterations_ = 0;
};

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report);
void write_convergence_json(std::ostream& out, const ConvergenceReport& report);
void write_census_csv(std::ostream& out, const std::vector<CensusTable>& tables);
void write_census_json(std::ostream& out, const std::vector<CensusTable>& tables);

}  // namespace symspace::bench
