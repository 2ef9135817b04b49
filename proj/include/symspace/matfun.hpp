// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense real matrix functions: principal exp/log/sqrt, spectrum queries,
// thin SVD, symmetric signature, and directional derivatives of exp read off
// block-triangular exponentials.
//
// Every function is pure. Inputs with non-finite entries are rejected with
// ErrorKind::Shape.

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "symspace/error.hpp"

namespace symspace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline constexpr double kDefaultSpectrumTol = 1e-10;

struct SpectrumCheck {
  bool has_negative_real_eigenvalue = false;
  /// Smallest real part among eigenvalues with |Im| <= tol; +inf if none.
  double min_real_part_on_axis = 0.0;
  double tolerance_used = kDefaultSpectrumTol;
  /// First eigenvalue found on the closed negative real axis, if any.
  std::optional<std::complex<double>> offending;
};

/// Flags eigenvalues with |Im λ| <= tol and Re λ <= tol. Requires tol > 0.
SpectrumCheck spectrum_check(const Mat& a, double tol = kDefaultSpectrumTol);

/// Principal exponential by scaling and squaring with diagonal Padé
/// approximants (degree 13 above the 1-norm threshold 5.37).
Mat mat_exp(const Mat& a);

/// Principal square root via the scaled product form of the Denman–Beavers
/// iteration. Throws Singular or LogBranch when the spectrum touches the
/// closed negative real axis.
Mat mat_sqrt(const Mat& a, double tol = kDefaultSpectrumTol);

/// Principal logarithm by inverse scaling and squaring: repeated square roots
/// until ||A - I||_F < 0.25, then a Gauss–Legendre Padé form of log(I + E).
Mat mat_log(const Mat& a, double tol = kDefaultSpectrumTol);

/// dexp_X Y, the (1,2) block of exp([[X, Y], [0, X]]).
Mat dexp(const Mat& x, const Mat& y);

/// d²/ds dt at 0 of exp(X + tY + sZ + stW), the (1,4) block of a 4x4 block
/// upper-triangular exponential.
Mat d2exp(const Mat& x, const Mat& y, const Mat& z, const Mat& w);

struct ThinSvd {
  Mat u;      // n x p, orthonormal columns
  Vec sigma;  // p, nonnegative, descending
  Mat v;      // p x p, orthogonal
};

/// Thin SVD of an n x p matrix with n >= p.
ThinSvd thin_svd(const Mat& a);

struct Signature {
  int num_positive = 0;
  int num_negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Eigenvalue-sign counts of a symmetric nonsingular matrix. Throws Shape on
/// asymmetry beyond 1e-12 (relative) and DegenerateSignature when some
/// |λ| <= 1e-10 ||S||.
Signature sym_signature(const Mat& s);

/// Symmetric-eigensolver based routines for symmetric input (SPD for log/sqrt).
Mat sym_exp(const Mat& s);
Mat sym_log(const Mat& s);
Mat sym_sqrt(const Mat& s);

}  // namespace symspace
