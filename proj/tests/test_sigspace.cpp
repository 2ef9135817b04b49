// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "symspace/error.hpp"
#include "symspace/sigspace.hpp"
#include "test_support.hpp"

namespace symspace::sig {
namespace {

using testing::rel_err;
using testing::Rng;

SigMatrix j_point(const SignatureForm& form) {
  return SigMatrix(form.j(), form);
}

template <typename F>
void expect_kind(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(SignatureForm, Basics) {
  const SignatureForm l = SignatureForm::lorentzian();
  EXPECT_EQ(l.n(), 4);
  EXPECT_EQ(l.j(), Mat(Eigen::Vector4d(-1, 1, 1, 1).asDiagonal()));
  EXPECT_EQ(l.signature(), (Signature{3, 1}));
  EXPECT_EQ(l.j() * l.j(), Mat(Mat::Identity(4, 4)));
  EXPECT_TRUE(SignatureForm::spd(3).is_identity());
  EXPECT_THROW(SignatureForm(-1, 2), Error);
}

TEST(SigMatrix, Validation) {
  const SignatureForm l = SignatureForm::lorentzian();
  expect_kind(ErrorKind::SignatureMismatch, [&] { SigMatrix(Mat::Identity(4, 4), l); });
  Mat a = l.j();
  a(0, 1) = 0.5;
  expect_kind(ErrorKind::Shape, [&] { SigMatrix(a, l); });
  expect_kind(ErrorKind::DegenerateSignature,
              [&] { SigMatrix(Mat(Eigen::Vector4d(-1, 0, 1, 1).asDiagonal()), l); });
  EXPECT_TRUE(j_point(l).in_chart_domain());
  Mat flipped = l.j();
  flipped(0, 0) = 1.0;
  flipped(1, 1) = -1.0;
  EXPECT_FALSE(SigMatrix(flipped, l).in_chart_domain());
}

TEST(TangentSym, RejectsNonMembers) {
  const SignatureForm l = SignatureForm::lorentzian();
  // Symmetric, but mixes the time and space indices with the wrong sign.
  Mat x = Mat::Zero(4, 4);
  x(0, 1) = x(1, 0) = 0.2;
  expect_kind(ErrorKind::NotInLts, [&] { TangentSym(x, l); });
  EXPECT_NO_THROW(TangentSym(Mat(x * l.j()), l));
  Mat skew = Mat::Zero(3, 3);
  skew(0, 1) = 0.1;
  skew(1, 0) = -0.1;
  expect_kind(ErrorKind::NotInLts, [&] { TangentSym(skew, SignatureForm::spd(3)); });
}

TEST(FMap, Examples) {
  const SignatureForm l = SignatureForm::lorentzian();
  EXPECT_EQ(f_map(TangentSym(Mat::Zero(4, 4), l)).matrix(), l.j());

  const SignatureForm spd = SignatureForm::spd(3);
  const Eigen::Vector3d a(0.3, -1.2, 2.0);
  const SigMatrix d = f_map(TangentSym(Mat(0.5 * a.asDiagonal()), spd));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(d.matrix()(i, i), std::exp(a(i)), 1e-13);

  const SignatureForm f11(1, 1);
  Mat x(2, 2);
  x << 0.3, 0.1, -0.1, 0.2;
  const SigMatrix out = f_map(TangentSym(x, f11));
  const Mat expected = testing::exp_series(2.0 * x, 40) * f11.j();
  EXPECT_LT((out.matrix() - expected).norm(), 1e-14);
  EXPECT_LT((out.matrix() - out.matrix().transpose()).norm(), 1e-15);
  EXPECT_EQ(sym_signature(out.matrix()), (Signature{1, 1}));
}

TEST(FInv, Examples) {
  const SignatureForm l = SignatureForm::lorentzian();
  EXPECT_LT(f_inv(j_point(l)).matrix().norm(), 1e-15);
  const SigMatrix d(Mat(Eigen::Vector2d(4.0, 9.0).asDiagonal()), SignatureForm::spd(2));
  const Mat x = f_inv(d).matrix();
  EXPECT_NEAR(x(0, 0), std::log(2.0), 1e-13);
  EXPECT_NEAR(x(1, 1), std::log(3.0), 1e-13);
}

TEST(FInv, RoundTrip) {
  Rng rng(61);
  for (const SignatureForm& form :
       {SignatureForm::lorentzian(), SignatureForm::spd(3), SignatureForm(2, 3)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Mat x = rng.sym_j_tangent(form, rng.uniform(0.01, 0.5));
      EXPECT_LT((f_inv(f_map(TangentSym(x, form))).matrix() - x).norm(), 1e-9);
    }
  }
}

TEST(FInv, OutsideDomainRaises) {
  const SignatureForm l = SignatureForm::lorentzian();
  Mat flipped = l.j();
  flipped(0, 0) = 1.0;
  flipped(1, 1) = -1.0;
  expect_kind(ErrorKind::OutsideChart, [&] { f_inv(SigMatrix(flipped, l)); });
}

TEST(Gpd, GroupElementHasTrivialSymmetricFactor) {
  Rng rng(62);
  const SignatureForm l = SignatureForm::lorentzian();
  const Mat q = rng.boost(l, 0.8);
  ASSERT_LT((q * l.j() * q.transpose() - l.j()).norm(), 1e-12);
  const PolarFactors f = gpd_factorize(q, l);
  EXPECT_LT((f.p - Mat::Identity(4, 4)).norm(), 1e-10);
  EXPECT_LT((f.q - q).norm(), 1e-10);
}

TEST(Gpd, SymmetricSpaceElementHasTrivialGroupFactor) {
  Rng rng(63);
  const SignatureForm l = SignatureForm::lorentzian();
  const Mat a = mat_exp(rng.sym_j_tangent(l, 0.7));
  const PolarFactors f = gpd_factorize(a, l);
  EXPECT_LT((f.p - a).norm(), 1e-10);
  EXPECT_LT((f.q - Mat::Identity(4, 4)).norm(), 1e-10);
}

TEST(Gpd, RandomNearIdentity) {
  Rng rng(64);
  for (const SignatureForm& form : {SignatureForm::lorentzian(), SignatureForm(2, 2)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Mat a = Mat::Identity(form.n(), form.n()) + rng.matrix_with_norm(form.n(), 0.5);
      const PolarFactors f = gpd_factorize(a, form);
      const Mat& j = form.j();
      EXPECT_LT((f.p * f.q - a).norm(), 1e-9);
      EXPECT_LT((f.p * j - j * f.p.transpose()).norm(), 1e-9);
      EXPECT_LT((f.q * j * f.q.transpose() - j).norm(), 1e-9);
    }
  }
}

TEST(Gpd, DomainViolationRaises) {
  Mat swap(2, 2);
  swap << 0, 1, 1, 0;
  expect_kind(ErrorKind::GpdDomain, [&] { gpd_factorize(swap, SignatureForm(1, 1)); });
}

TEST(InterpolateSig, DiagonalSpdGeometricMean) {
  const SignatureForm spd = SignatureForm::spd(3);
  const Eigen::Vector3d a(1.0, 4.0, 0.5), b(9.0, 1.0, 2.0);
  const std::vector<SigMatrix> data{SigMatrix(Mat(a.asDiagonal()), spd),
                                    SigMatrix(Mat(b.asDiagonal()), spd)};
  const SigMatrix mid = interpolate_sig_weighted(data, Eigen::Vector2d(0.5, 0.5), j_point(spd));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(mid.matrix()(i, i), std::sqrt(a(i) * b(i)), 1e-13);
}

TEST(InterpolateSig, EqualDataReproduced) {
  Rng rng(65);
  const SignatureForm l = SignatureForm::lorentzian();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(3, 1);
  const SigMatrix u = rng.sig_near_j(l, 0.9);
  const std::vector<SigMatrix> data(shapes.size(), u);
  const SigMatrix out = interpolate_sig(data, shapes, rng.unit_point(3), j_point(l));
  EXPECT_LT(rel_err(out.matrix(), u.matrix()), 1e-12);
}

TEST(InterpolateSig, SpdFastPathMatchesGeneric) {
  Rng rng(66);
  const SignatureForm spd = SignatureForm::spd(4);
  const ShapeSet shapes = ShapeSet::tensor_lagrange(2, 2);
  SigChartOptions generic;
  generic.spd_fast_path = false;
  ASSERT_TRUE(SigChart(j_point(spd)).uses_spd_fast_path());
  ASSERT_FALSE(SigChart(j_point(spd), generic).uses_spd_fast_path());
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SigMatrix> data;
    for (int i = 0; i < shapes.size(); ++i) data.emplace_back(rng.spd(4, 1.5), spd);
    const Eigen::VectorXd x = rng.unit_point(2);
    const SigMatrix fast = interpolate_sig(data, shapes, x, j_point(spd));
    const SigMatrix slow = interpolate_sig(data, shapes, x, j_point(spd), generic);
    EXPECT_LT(rel_err(fast.matrix(), slow.matrix()), 1e-10);
  }
}

TEST(InterpolateSig, DeterminantIsWeightedGeometricMean) {
  Rng rng(67);
  const SignatureForm l = SignatureForm::lorentzian();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(2, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SigMatrix> data;
    for (int i = 0; i < shapes.size(); ++i) data.push_back(rng.sig_near_j(l, 0.8));
    const Eigen::VectorXd x = rng.unit_point(2);
    const Eigen::VectorXd w = shapes.values(x);
    double expected = 0.0;
    for (int i = 0; i < shapes.size(); ++i)
      expected += w(i) * std::log(std::abs(data[i].matrix().determinant()));
    const SigMatrix out = interpolate_sig(data, shapes, x, j_point(l));
    EXPECT_NEAR(std::log(std::abs(out.matrix().determinant())), expected, 1e-9);
    EXPECT_LT(out.matrix().determinant(), 0.0);
  }
}

TEST(InterpolateSig, SignaturePreserved) {
  Rng rng(68);
  const SignatureForm l = SignatureForm::lorentzian();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(3, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SigMatrix> data;
    for (int i = 0; i < shapes.size(); ++i) data.push_back(rng.sig_near_j(l, 1.2));
    for (int k = 0; k < 10; ++k) {
      const SigMatrix out = interpolate_sig(data, shapes, rng.unit_point(3), j_point(l));
      EXPECT_EQ(sym_signature(out.matrix()), (Signature{3, 1}));
    }
  }
}

TEST(InterpolateSig, ConjugationEquivariance) {
  Rng rng(69);
  const SignatureForm l = SignatureForm::lorentzian();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(2, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SigMatrix> data, moved;
    const Mat q = rng.boost(l, rng.uniform(0.01, 0.3));
    for (int i = 0; i < shapes.size(); ++i) {
      data.push_back(rng.sig_near_j(l, 0.7));
      moved.push_back(SigMatrix::from_computed(q * data.back().matrix() * q.transpose(), l));
    }
    const Eigen::VectorXd x = rng.unit_point(2);
    const Mat a = interpolate_sig(data, shapes, x, j_point(l)).matrix();
    const Mat b = interpolate_sig(moved, shapes, x, j_point(l)).matrix();
    EXPECT_LT(rel_err(b, q * a * q.transpose()), 1e-8);
  }
}

TEST(InterpolateSig, InversionCommutes) {
  Rng rng(70);
  const SignatureForm l = SignatureForm::lorentzian();
  const Mat& j = l.j();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(2, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SigMatrix> data, reflected, inverted;
    for (int i = 0; i < shapes.size(); ++i) {
      data.push_back(rng.sig_near_j(l, 0.7));
      const Mat inv = data.back().matrix().inverse();
      reflected.push_back(SigMatrix::from_computed(j * inv * j, l));
      inverted.push_back(SigMatrix::from_computed(inv, l));
    }
    const Eigen::VectorXd x = rng.unit_point(2);
    const Mat base = interpolate_sig(data, shapes, x, j_point(l)).matrix();
    const Mat r = interpolate_sig(reflected, shapes, x, j_point(l)).matrix();
    const Mat i = interpolate_sig(inverted, shapes, x, j_point(l)).matrix();
    EXPECT_LT(rel_err(r, j * base.inverse() * j), 1e-8);
    EXPECT_LT(rel_err(i, base.inverse()), 1e-8);
  }
}

TEST(InterpolateSig, BaseFactorPostMultiplication) {
  Rng rng(71);
  const SignatureForm l = SignatureForm::lorentzian();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat abar = Mat::Identity(4, 4) + rng.matrix_with_norm(4, 0.3);
    const Mat q = rng.boost(l, 0.5);
    const SigMatrix b1 = base_from_factor(abar, l);
    const SigMatrix b2 = base_from_factor(abar * q, l);
    EXPECT_LT(rel_err(b1.matrix(), b2.matrix()), 1e-13);
    std::vector<SigMatrix> data;
    for (int i = 0; i < shapes.size(); ++i) data.push_back(rng.sig_near_j(l, 0.5));
    const Eigen::VectorXd x = rng.unit_point(1);
    EXPECT_LT(rel_err(interpolate_sig(data, shapes, x, b1).matrix(),
                      interpolate_sig(data, shapes, x, b2).matrix()),
              1e-10);
  }
}

TEST(InterpolateSig, GeodesicSymmetryIsInvolution) {
  Rng rng(72);
  const SignatureForm l = SignatureForm::lorentzian();
  const SigMatrix u = rng.sig_near_j(l, 0.8);
  EXPECT_LT(rel_err(geodesic_symmetry(geodesic_symmetry(u)).matrix(), u.matrix()), 1e-12);
  EXPECT_LT(rel_err(geodesic_symmetry(j_point(l)).matrix(), l.j()), 1e-15);
}

TEST(KarcherSig, FullGroupEquivariance) {
  Rng rng(73);
  const SignatureForm l = SignatureForm::lorentzian();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(1, 2);
  int ran = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Mat a = Mat::Identity(4, 4) + rng.matrix_with_norm(4, 0.3);
    std::vector<SigMatrix> data, moved;
    for (int i = 0; i < shapes.size(); ++i) {
      data.push_back(rng.sig_near_j(l, 0.5));
      moved.push_back(SigMatrix::from_computed(a * data.back().matrix() * a.transpose(), l));
    }
    const Eigen::VectorXd x = rng.unit_point(1);
    const SigMatrix init = j_point(l);
    const SigMatrix moved_init = SigMatrix::from_computed(a * l.j() * a.transpose(), l);
    try {
      const auto r1 = interpolate_sig_karcher(data, shapes, x, init);
      const auto r2 = interpolate_sig_karcher(moved, shapes, x, moved_init);
      EXPECT_LT(rel_err(r2.point.matrix(), a * r1.point.matrix() * a.transpose()), 1e-7);
      ++ran;
    } catch (const Error&) {
      // outside the chart domain
    }
  }
  EXPECT_GT(ran, 20);
}

TEST(KarcherSig, SingleDatumAndResidual) {
  Rng rng(74);
  const SignatureForm l = SignatureForm::lorentzian();
  const std::vector<SigMatrix> one{rng.sig_near_j(l, 0.6)};
  const auto single = interpolate_sig_karcher_weighted(one, Eigen::VectorXd::Ones(1));
  EXPECT_LT(rel_err(single.point.matrix(), one[0].matrix()), 1e-12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SigMatrix> data;
    for (int i = 0; i < 3; ++i) data.push_back(rng.sig_near_j(l, 0.5));
    Eigen::Vector3d w(rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1));
    w /= w.sum();
    const auto r = interpolate_sig_karcher_weighted(data, w);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.residual, 1e-12);
  }
}

TEST(SigDerivatives, ConstantDataHasZeroDerivatives) {
  Rng rng(75);
  const SignatureForm l = SignatureForm::lorentzian();
  const ShapeSet shapes = ShapeSet::tensor_lagrange(2, 2);
  const std::vector<SigMatrix> data(shapes.size(), rng.sig_near_j(l, 0.5));
  const InterpolantJet jet =
      interpolate_sig_derivatives(data, shapes, rng.unit_point(2), j_point(l));
  for (const Mat& d : jet.first) EXPECT_LT(d.norm(), 1e-12);
  for (const auto& row : jet.second)
    for (const Mat& d : row) EXPECT_LT(d.norm(), 1e-11);
}

TEST(SigDerivatives, DiagonalSpdPair) {
  const SignatureForm spd = SignatureForm::spd(2);
  const Eigen::Vector2d a(1.0, 3.0), b(5.0, 0.5);
  const std::vector<SigMatrix> data{SigMatrix(Mat(a.asDiagonal()), spd),
                                    SigMatrix(Mat(b.asDiagonal()), spd)};
  const ShapeSet shapes = ShapeSet::tensor_lagrange(1, 1);
  const double t = 0.3;
  const InterpolantJet jet =
      interpolate_sig_derivatives(data, shapes, Eigen::VectorXd::Constant(1, t), j_point(spd));
  for (int i = 0; i < 2; ++i) {
    // a^(1-t) b^t
    const double theta = std::log(b(i) / a(i));
    const double v = a(i) * std::exp(t * theta);
    EXPECT_NEAR(jet.value(i, i), v, 1e-13);
    EXPECT_NEAR(jet.first[0](i, i), theta * v, 1e-12);
    EXPECT_NEAR(jet.second[0][0](i, i), theta * theta * v, 1e-12);
  }
}

}  // namespace
}  // namespace symspace::sig
