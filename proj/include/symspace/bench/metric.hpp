// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Static 4x4 Lorentzian metric fields on (t, x, y, z) with J = diag(-1,1,1,1).

#include <array>
#include <functional>
#include <string>
#include <string_view>

#include "symspace/sigspace.hpp"

namespace symspace::bench {

using Point4 = std::array<double, 4>;  // (t, x, y, z)

/// Schwarzschild metric in Cartesian coordinates with radius R:
/// diag(-(1 - R/r)) ⊕ (I + R/(r - R) vvᵀ/r²), v = (x, y, z). Throws Horizon
/// when r <= R.
Mat schwarzschild_matrix(const Point4& xi, double radius);

/// Block-diagonal metric with a 2x2 block in x that keeps signature (3,1)
/// pointwise but whose cell averages at x = k/2, (k+1)/2 are positive definite.
Mat sin2_matrix(const Point4& xi);

sig::SigMatrix eval_schwarzschild(double t, double x, double y, double z, double radius);
sig::SigMatrix eval_sin2_metric(double t, double x, double y, double z);

enum class MetricKind { Schwarzschild, Sin2, Custom };

std::string_view to_string(MetricKind kind);

class MetricField {
 public:
  static MetricField schwarzschild(double radius = 1.0) {
    return MetricField(MetricKind::Schwarzschild, radius);
  }
  static MetricField sin2() { return MetricField(MetricKind::Sin2, 0.0); }

  using ValueFn = std::function<Mat(const Point4&)>;
  using GradientFn = std::function<std::array<Mat, 4>(const Point4&)>;
  /// User-supplied field, e.g. for constant or polynomial test metrics.
  static MetricField custom(std::string name, ValueFn value, GradientFn gradient) {
    MetricField f(MetricKind::Custom, 0.0);
    f.name_ = std::move(name);
    f.value_fn_ = std::move(value);
    f.gradient_fn_ = std::move(gradient);
    return f;
  }

  MetricKind kind() const noexcept { return kind_; }
  double radius() const noexcept { return radius_; }
  std::string name() const {
    return kind_ == MetricKind::Custom ? name_ : std::string(to_string(kind_));
  }

  Mat value(const Point4& xi) const;
  /// ∂L/∂ξ_j for ξ = (t, x, y, z); the t-derivative is zero (static metrics).
  std::array<Mat, 4> gradient(const Point4& xi) const;

  sig::SigMatrix sample(const Point4& xi) const {
    return sig::SigMatrix(value(xi), sig::SignatureForm::lorentzian());
  }

 private:
  MetricField(MetricKind kind, double radius) : kind_(kind), radius_(radius) {}

  MetricKind kind_;
  double radius_;
  std::string name_;
  ValueFn value_fn_;
  GradientFn gradient_fn_;
};

}  // namespace symspace::bench
