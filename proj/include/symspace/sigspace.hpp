// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Nonsingular symmetric matrices of fixed signature (q, p), realized as the
// coset space GL_n / O(p, q). J = diag(-1,...,-1, 1,...,1) with p entries -1.
// J = I gives SPD(n); J = diag(-1,1,1,1) gives Lorentzian metrics.
//
// Interpolation about a base L̄ in the same space:
//
//     I L(x) = L̄ exp( sum_i phi_i(x) log(L̄⁻¹ L_i) ),
//
// which requires every L̄⁻¹ L_i to have no eigenvalue on the closed negative
// real axis. The logarithm is taken of the nonsymmetric product; symmetry of
// the result is checked afterwards to 1e-9 and then enforced.

#include <optional>
#include <span>

#include "symspace/interpolation.hpp"
#include "symspace/matfun.hpp"
#include "symspace/shapefn.hpp"

namespace symspace::sig {

class SignatureForm {
 public:
  /// p entries equal to -1 followed by q entries equal to +1.
  SignatureForm(int p, int q);

  static SignatureForm spd(int n) { return SignatureForm(0, n); }
  static SignatureForm lorentzian() { return SignatureForm(1, 3); }

  int n() const noexcept { return p_ + q_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  const Mat& j() const noexcept { return j_; }
  bool is_identity() const noexcept { return p_ == 0; }

  /// Eigenvalue-sign counts (positive, negative) = (q, p).
  Signature signature() const noexcept { return {q_, p_}; }

  friend bool operator==(const SignatureForm& a, const SignatureForm& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  int p_;
  int q_;
  Mat j_;
};

/// A symmetric nonsingular matrix whose signature matches its form.
class SigMatrix {
 public:
  /// Validates L = Lᵀ to 1e-12 (relative) and sym_signature(L) = (q, p).
  SigMatrix(Mat l, SignatureForm form);

  /// For computed results: accepts relative asymmetry up to 1e-9, stores the
  /// symmetric part, and checks the signature.
  static SigMatrix from_computed(const Mat& l, SignatureForm form);

  const Mat& matrix() const noexcept { return l_; }
  const SignatureForm& form() const noexcept { return form_; }

  /// True iff L J has no eigenvalue on the closed negative real axis.
  bool in_chart_domain(double tol = kDefaultSpectrumTol) const;

 private:
  SigMatrix(Mat l, SignatureForm form, double symmetry_tol);

  Mat l_;
  SignatureForm form_;
};

/// An element X of sym_J(n) = { X : X J = J Xᵀ }.
class TangentSym {
 public:
  /// Throws NotInLts unless ||X J - J Xᵀ||_F <= 1e-12 max(1, ||X||_F).
  TangentSym(Mat x, SignatureForm form);

  const Mat& matrix() const noexcept { return x_; }
  const SignatureForm& form() const noexcept { return form_; }

 private:
  Mat x_;
  SignatureForm form_;
};

/// exp(2X) J.
SigMatrix f_map(const TangentSym& x);

/// ½ log(L J). Throws OutsideChart naming the offending eigenvalue when L J
/// touches the closed negative real axis.
TangentSym f_inv(const SigMatrix& l, double tol = kDefaultSpectrumTol);

/// A = P Q with P = (A J Aᵀ J)^{1/2} in Sym_J(n) and Q in O(p, q).
struct PolarFactors {
  Mat p;
  Mat q;
};

/// Throws GpdDomain when A J Aᵀ J has an eigenvalue on the closed negative
/// real axis (or A is singular).
PolarFactors gpd_factorize(const Mat& a, const SignatureForm& form,
                           double tol = kDefaultSpectrumTol);

/// L̄ = Ā J Āᵀ, the base point determined by a coset representative Ā.
SigMatrix base_from_factor(const Mat& abar, const SignatureForm& form);

/// s(L) = J L⁻¹ J, the geodesic symmetry about J.
SigMatrix geodesic_symmetry(const SigMatrix& l);

struct SigChartOptions {
  double spectrum_tol = kDefaultSpectrumTol;
  /// With J = I and base = I, use symmetric eigendecompositions for log/exp.
  bool spd_fast_path = true;
};

/// Chart about L̄: to_tangent(L) = log(L̄⁻¹ L), from_tangent(T) = L̄ exp(T).
class SigChart {
 public:
  using Point = SigMatrix;
  using Tangent = Mat;

  explicit SigChart(SigMatrix base, SigChartOptions options = {});

  Mat to_tangent(const SigMatrix& l) const;
  SigMatrix from_tangent(const Mat& t) const;
  const SigMatrix& base() const noexcept { return base_; }
  Mat zero_tangent() const { return Mat::Zero(n(), n()); }

  Mat ambient_value(const Mat& t) const;
  /// L̄ dexp_T(Y).
  Mat differential(const Mat& t, const Mat& y) const;
  /// L̄ times the (1,4) block of the 4x4 block exponential.
  Mat second_differential(const Mat& t, const Mat& y, const Mat& z, const Mat& w) const;

  bool uses_spd_fast_path() const noexcept { return fast_; }

 private:
  Eigen::Index n() const { return base_.matrix().rows(); }

  SigMatrix base_;
  Mat base_inv_;
  SigChartOptions options_;
  bool fast_;
};

/// Interpolation in the chart about a fixed base. A chart failure for datum i
/// surfaces as a DatumError with kind OutsideChart and index i.
SigMatrix interpolate_sig(std::span<const SigMatrix> data, const ShapeSet& shapes,
                          const Eigen::VectorXd& x, const SigMatrix& base,
                          const SigChartOptions& options = {});

SigMatrix interpolate_sig_weighted(std::span<const SigMatrix> data, const Eigen::VectorXd& weights,
                                   const SigMatrix& base, const SigChartOptions& options = {});

/// Karcher variant: fixed-point iteration for sum_i phi_i log(L̄⁻¹ L_i) = 0. The
/// initial base defaults to the datum with the largest weight.
KarcherResult<SigMatrix> interpolate_sig_karcher(std::span<const SigMatrix> data,
                                                 const ShapeSet& shapes, const Eigen::VectorXd& x,
                                                 std::optional<SigMatrix> initial = std::nullopt,
                                                 const KarcherOptions& karcher = {},
                                                 const SigChartOptions& options = {});

KarcherResult<SigMatrix> interpolate_sig_karcher_weighted(
    std::span<const SigMatrix> data, const Eigen::VectorXd& weights,
    std::optional<SigMatrix> initial = std::nullopt, const KarcherOptions& karcher = {},
    const SigChartOptions& options = {});

/// Value, first derivatives (one per reference direction) and second
/// derivatives (all direction pairs) of the fixed-base interpolant.
InterpolantJet interpolate_sig_derivatives(std::span<const SigMatrix> data, const ShapeSet& shapes,
                                           const Eigen::VectorXd& x, const SigMatrix& base,
                                           const SigChartOptions& options = {});

}  // namespace symspace::sig
