// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/bench/metric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace symspace::bench {

namespace {

using std::numbers::pi;

double radius_of(const Point4& xi, double radius) {
  const double r = std::sqrt(xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3]);
  if (!(r > radius)) {
    std::ostringstream os;
    os << "Schwarzschild metric undefined at r = " << r << " <= R = " << radius;
    throw Error(ErrorKind::Horizon, os.str());
  }
  return r;
}

}  // namespace

Mat schwarzschild_matrix(const Point4& xi, double radius) {
  const double r = radius_of(xi, radius);
  const double g = radius / ((r - radius) * r * r);
  Mat l = Mat::Zero(4, 4);
  l(0, 0) = -(1.0 - radius / r);
  for (int a = 1; a < 4; ++a) {
    for (int b = 1; b < 4; ++b) l(a, b) = (a == b ? 1.0 : 0.0) + g * xi[a] * xi[b];
  }
  return l;
}

Mat sin2_matrix(const Point4& xi) {
  const double x = xi[1];
  const double s2 = std::sin(2.0 * pi * x);
  const double s1 = std::sin(pi * x);
  Mat l = Mat::Identity(4, 4);
  l(0, 0) = -6.0 * s2 * s2 + 3.0 * s1 * s1;
  l(0, 1) = l(1, 0) = 3.0 * std::cos(2.0 * pi * x);
  l(1, 1) = 2.0 * s2 * s2 + 2.0 * s1 * s1;
  return l;
}

sig::SigMatrix eval_schwarzschild(double t, double x, double y, double z, double radius) {
  return sig::SigMatrix(schwarzschild_matrix({t, x, y, z}, radius),
                        sig::SignatureForm::lorentzian());
}

sig::SigMatrix eval_sin2_metric(double t, double x, double y, double z) {
  return sig::SigMatrix(sin2_matrix({t, x, y, z}), sig::SignatureForm::lorentzian());
}

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Schwarzschild: return "schwarzschild";
    case MetricKind::Sin2: return "sin2";
    case MetricKind::Custom: return "custom";
  }
  return "unknown";
}

Mat MetricField::value(const Point4& xi) const {
  if (kind_ == MetricKind::Custom) return value_fn_(xi);
  return kind_ == MetricKind::Schwarzschild ? schwarzschild_matrix(xi, radius_) : sin2_matrix(xi);
}

std::array<Mat, 4> MetricField::gradient(const Point4& xi) const {
  if (kind_ == MetricKind::Custom) return gradient_fn_(xi);
  std::array<Mat, 4> grad;
  for (Mat& m : grad) m = Mat::Zero(4, 4);

  if (kind_ == MetricKind::Sin2) {
    const double x = xi[1];
    const double s4 = std::sin(4.0 * pi * x);
    const double s2 = std::sin(2.0 * pi * x);
    Mat& dx = grad[1];
    dx(0, 0) = -12.0 * pi * s4 + 3.0 * pi * s2;
    dx(0, 1) = dx(1, 0) = -6.0 * pi * s2;
    dx(1, 1) = 4.0 * pi * s4 + 2.0 * pi * s2;
    return grad;
  }

  const double big_r = radius_;
  const double r = radius_of(xi, big_r);
  const double g = big_r / ((r - big_r) * r * r);
  const double dg = -big_r * (3.0 * r - 2.0 * big_r) / ((r - big_r) * (r - big_r) * r * r * r);
  for (int i = 1; i < 4; ++i) {
    Mat& d = grad[i];
    d(0, 0) = -big_r * xi[i] / (r * r * r);
    for (int a = 1; a < 4; ++a) {
      for (int b = 1; b < 4; ++b) {
        d(a, b) = dg * (xi[i] / r) * xi[a] * xi[b] +
                  g * ((i == a ? xi[b] : 0.0) + (i == b ? xi[a] : 0.0));
      }
    }
  }
  return grad;
}

}  // namespace symspace::bench
