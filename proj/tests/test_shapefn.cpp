// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "symspace/error.hpp"
#include "symspace/quadrature.hpp"
#include "symspace/shapefn.hpp"
#include "test_support.hpp"

namespace symspace {
namespace {

using testing::Rng;

Eigen::VectorXd pt(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double c : v) x(i++) = c;
  return x;
}

TEST(ShapeSet, LinearOneDimensional) {
  const ShapeSet s = ShapeSet::tensor_lagrange(1, 1);
  ASSERT_EQ(s.size(), 2);
  const ShapeEval e = s.eval(pt({0.25}));
  EXPECT_NEAR(e.values(0), 0.75, 1e-15);
  EXPECT_NEAR(e.values(1), 0.25, 1e-15);
  EXPECT_NEAR(e.gradients(0, 0), -1.0, 1e-15);
  EXPECT_NEAR(e.gradients(1, 0), 1.0, 1e-15);
}

TEST(ShapeSet, QuadraticMidnode) {
  const ShapeSet s = ShapeSet::tensor_lagrange(1, 2);
  const Eigen::VectorXd v = s.values(pt({0.5}));
  EXPECT_NEAR(v(0), 0.0, 1e-15);
  EXPECT_NEAR(v(1), 1.0, 1e-15);
  EXPECT_NEAR(v(2), 0.0, 1e-15);
  EXPECT_NEAR(s.nodes()[1](0), 0.5, 1e-15);
}

TEST(ShapeSet, TrilinearCentre) {
  const ShapeSet s = ShapeSet::tensor_lagrange(3, 1);
  ASSERT_EQ(s.size(), 8);
  const Eigen::VectorXd v = s.values(pt({0.5, 0.5, 0.5}));
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(v(i), 0.125, 1e-15);
}

TEST(ShapeSet, LexicographicNodes) {
  const ShapeSet s = ShapeSet::tensor_lagrange(2, 1);
  EXPECT_EQ(s.nodes()[0], pt({0, 0}));
  EXPECT_EQ(s.nodes()[1], pt({0, 1}));
  EXPECT_EQ(s.nodes()[2], pt({1, 0}));
  EXPECT_EQ(s.nodes()[3], pt({1, 1}));
}

TEST(ShapeSet, KroneckerAtNodes) {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= 3; ++k) {
      const ShapeSet s = ShapeSet::tensor_lagrange(d, k);
      ASSERT_EQ(s.size(), static_cast<int>(std::pow(k + 1, d)));
      for (int j = 0; j < s.size(); ++j) {
        const Eigen::VectorXd v = s.values(s.nodes()[j]);
        for (int i = 0; i < s.size(); ++i) EXPECT_NEAR(v(i), i == j ? 1.0 : 0.0, 1e-13);
      }
    }
  }
}

TEST(ShapeSet, PartitionOfUnityAndDerivatives) {
  Rng rng(31);
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= 3; ++k) {
      const ShapeSet s = ShapeSet::tensor_lagrange(d, k);
      for (int trial = 0; trial < 100; ++trial) {
        const ShapeEval e = s.eval(rng.unit_point(d));
        EXPECT_NEAR(e.values.sum(), 1.0, 1e-11);
        EXPECT_LT(e.gradients.colwise().sum().norm(), 1e-11);
        Mat h = Mat::Zero(d, d);
        for (const Mat& hi : e.hessians) h += hi;
        EXPECT_LT(h.norm(), 1e-11);
      }
    }
  }
}

TEST(ShapeSet, GradientsAndHessiansMatchDifferences) {
  Rng rng(32);
  const double h = 1e-5;
  for (int d = 1; d <= 3; ++d) {
    const ShapeSet s = ShapeSet::tensor_lagrange(d, 2);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd x = rng.unit_point(d);
      const ShapeEval e = s.eval(x);
      for (int j = 0; j < d; ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp(j) += h;
        xm(j) -= h;
        const Eigen::VectorXd fd = (s.values(xp) - s.values(xm)) / (2 * h);
        EXPECT_LT((e.gradients.col(j) - fd).norm(), 1e-7);
        const ShapeEval ep = s.eval(xp), em = s.eval(xm);
        for (int i = 0; i < s.size(); ++i) {
          const Eigen::VectorXd hfd = (ep.gradients.row(i) - em.gradients.row(i)) / (2 * h);
          EXPECT_LT((e.hessians[i].row(j).transpose() - hfd).norm(), 1e-6);
        }
      }
    }
  }
}

TEST(ShapeSet, PolynomialReproduction) {
  Rng rng(33);
  for (int d = 1; d <= 3; ++d) {
    for (int k = 1; k <= 3; ++k) {
      const ShapeSet s = ShapeSet::tensor_lagrange(d, k);
      // Monomials with total degree <= k.
      std::vector<std::vector<int>> exps;
      std::function<void(std::vector<int>, int)> gen = [&](std::vector<int> a, int left) {
        if (static_cast<int>(a.size()) == d) {
          exps.push_back(a);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          auto b = a;
          b.push_back(e);
          gen(b, left - e);
        }
      };
      gen({}, k);
      for (const auto& a : exps) {
        auto f = [&](const Eigen::VectorXd& x) {
          double v = 1.0;
          for (int j = 0; j < d; ++j) v *= std::pow(x(j), a[j]);
          return v;
        };
        for (int trial = 0; trial < 10; ++trial) {
          const Eigen::VectorXd x = rng.unit_point(d);
          const Eigen::VectorXd w = s.values(x);
          double interp = 0.0;
          for (int i = 0; i < s.size(); ++i) interp += w(i) * f(s.nodes()[i]);
          EXPECT_NEAR(interp, f(x), 1e-11);
        }
      }
    }
  }
}

TEST(ShapeSet, UnsupportedRaises) {
  for (auto [d, k] : {std::pair{0, 1}, {5, 1}, {2, 0}, {2, 4}}) {
    try {
      ShapeSet::tensor_lagrange(d, k);
      FAIL() << d << "," << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedBasis);
    }
  }
}

TEST(ShapeSet, WrongQueryDimensionRaises) {
  const ShapeSet s = ShapeSet::tensor_lagrange(2, 1);
  EXPECT_THROW(s.values(pt({0.5})), Error);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (int n = 1; n <= 8; ++n) {
    const GaussRule r = gauss_legendre(n);
    ASSERT_EQ(static_cast<int>(r.points.size()), n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += r.weights[i] * std::pow(r.points[i], p);
      EXPECT_NEAR(sum, 1.0 / (p + 1), 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, TwoPointNodes) {
  const GaussRule r = gauss_legendre(2);
  EXPECT_NEAR(r.points[0], 0.5 - 0.5 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.points[1], 0.5 + 0.5 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.weights[0], 0.5, 1e-15);
}

}  // namespace
}  // namespace symspace
