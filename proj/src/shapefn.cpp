// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/shapefn.hpp"

#include <array>
#include <string>

#include "symspace/error.hpp"

namespace symspace {

namespace {

// 1-D Lagrange polynomial a of degree k on nodes t_b = b/k, with its first two
// derivatives, evaluated at t.
struct Lagrange1d {
  double value = 1.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

Lagrange1d lagrange_1d(int k, int a, double t) {
  // ℓ_a(t) = Π_{b≠a} (t - t_b) / (t_a - t_b); derivatives by the product rule
  // over factor pairs.
  std::array<double, 4> num{};
  std::array<double, 4> den{};
  int count = 0;
  double scale = 1.0;
  const double ta = static_cast<double>(a) / k;
  for (int b = 0; b <= k; ++b) {
    if (b == a) continue;
    const double tb = static_cast<double>(b) / k;
    num[count] = t - tb;
    den[count] = ta - tb;
    scale /= den[count];
    ++count;
  }
  Lagrange1d out;
  double value = 1.0;
  for (int i = 0; i < count; ++i) value *= num[i];
  double d1 = 0.0;
  double d2 = 0.0;
  for (int i = 0; i < count; ++i) {
    double prod_i = 1.0;
    for (int j = 0; j < count; ++j) {
      if (j != i) prod_i *= num[j];
    }
    d1 += prod_i;
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      double prod_ij = 1.0;
      for (int l = 0; l < count; ++l) {
        if (l != i && l != j) prod_ij *= num[l];
      }
      d2 += prod_ij;
    }
  }
  out.value = value * scale;
  out.d1 = d1 * scale;
  out.d2 = d2 * scale;
  return out;
}

}  // namespace

ShapeSet ShapeSet::tensor_lagrange(int d, int k) {
  if (d < 1 || d > 4 || k < 1 || k > 3) {
    throw Error(ErrorKind::UnsupportedBasis,
                "tensor Lagrange basis needs d in 1..4 and k in 1..3, got d=" + std::to_string(d) +
                    ", k=" + std::to_string(k));
  }
  return ShapeSet(d, k);
}

ShapeSet::ShapeSet(int d, int k) : dim_(d), degree_(k) {
  int total = 1;
  for (int j = 0; j < d; ++j) total *= k + 1;
  nodes_.reserve(total);
  multi_.reserve(total);
  for (int i = 0; i < total; ++i) {
    std::vector<int> idx(d);
    int rest = i;
    for (int j = d - 1; j >= 0; --j) {
      idx[j] = rest % (k + 1);
      rest /= k + 1;
    }
    Eigen::VectorXd node(d);
    for (int j = 0; j < d; ++j) node(j) = static_cast<double>(idx[j]) / k;
    nodes_.push_back(node);
    multi_.push_back(std::move(idx));
  }
}

void ShapeSet::check_point(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::Shape, "query point dimension mismatch");
}

Eigen::VectorXd ShapeSet::values(const Eigen::VectorXd& x) const {
  check_point(x);
  Eigen::VectorXd out(size());
  for (int i = 0; i < size(); ++i) {
    double v = 1.0;
    for (int j = 0; j < dim_; ++j) v *= lagrange_1d(degree_, multi_[i][j], x(j)).value;
    out(i) = v;
  }
  return out;
}

ShapeEval ShapeSet::eval(const Eigen::VectorXd& x) const {
  check_point(x);
  const int m = size();
  ShapeEval out;
  out.values.resize(m);
  out.gradients.resize(m, dim_);
  out.hessians.assign(m, Eigen::MatrixXd::Zero(dim_, dim_));

  std::vector<Lagrange1d> factors(dim_);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < dim_; ++j) factors[j] = lagrange_1d(degree_, multi_[i][j], x(j));
    double v = 1.0;
    for (int j = 0; j < dim_; ++j) v *= factors[j].value;
    out.values(i) = v;
    for (int a = 0; a < dim_; ++a) {
      double g = 1.0;
      for (int j = 0; j < dim_; ++j) g *= (j == a) ? factors[j].d1 : factors[j].value;
      out.gradients(i, a) = g;
      for (int b = a; b < dim_; ++b) {
        double h = 1.0;
        for (int j = 0; j < dim_; ++j) {
          if (a == b) {
            h *= (j == a) ? factors[j].d2 : factors[j].value;
          } else {
            h *= (j == a || j == b) ? factors[j].d1 : factors[j].value;
          }
        }
        out.hessians[i](a, b) = h;
        out.hessians[i](b, a) = h;
      }
    }
  }
  return out;
}

}  // namespace symspace
