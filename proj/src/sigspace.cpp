// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/sigspace.hpp"

#include <sstream>
#include <string>

namespace symspace::sig {

namespace {

void require_form_size(const Mat& m, const SignatureForm& form, const char* what) {
  if (m.rows() != form.n() || m.cols() != form.n()) {
    std::ostringstream os;
    os << what << ": expected " << form.n() << "x" << form.n() << ", got " << m.rows() << "x"
       << m.cols();
    throw Error(ErrorKind::Shape, os.str());
  }
  if (!m.allFinite()) throw Error(ErrorKind::Shape, std::string(what) + ": non-finite entry");
}

std::string signature_text(const Signature& s) {
  return "(" + std::to_string(s.num_positive) + "," + std::to_string(s.num_negative) + ")";
}

bool is_domain_failure(const Error& e) {
  return e.kind() == ErrorKind::LogBranch || e.kind() == ErrorKind::Singular;
}

}  // namespace

SignatureForm::SignatureForm(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q < 1) {
    throw Error(ErrorKind::Shape, "signature form needs p, q >= 0 and p + q >= 1");
  }
  j_ = Mat::Identity(p + q, p + q);
  for (int i = 0; i < p; ++i) j_(i, i) = -1.0;
}

SigMatrix::SigMatrix(Mat l, SignatureForm form) : SigMatrix(std::move(l), std::move(form), 1e-12) {}

SigMatrix::SigMatrix(Mat l, SignatureForm form, double symmetry_tol)
    : l_(std::move(l)), form_(std::move(form)) {
  require_form_size(l_, form_, "SigMatrix");
  const double asym = (l_ - l_.transpose()).norm();
  if (asym > symmetry_tol * l_.norm()) {
    std::ostringstream os;
    os << "SigMatrix: asymmetry " << asym << " exceeds tolerance";
    throw Error(ErrorKind::Shape, os.str());
  }
  l_ = 0.5 * (l_ + l_.transpose()).eval();
  const Signature sig = sym_signature(l_);
  if (!(sig == form_.signature())) {
    throw Error(ErrorKind::SignatureMismatch, "SigMatrix: signature " + signature_text(sig) +
                                                  " does not match form " +
                                                  signature_text(form_.signature()));
  }
}

SigMatrix SigMatrix::from_computed(const Mat& l, SignatureForm form) {
  return SigMatrix(l, std::move(form), 1e-9);
}

bool SigMatrix::in_chart_domain(double tol) const {
  return !spectrum_check(l_ * form_.j(), tol).has_negative_real_eigenvalue;
}

TangentSym::TangentSym(Mat x, SignatureForm form) : x_(std::move(x)), form_(std::move(form)) {
  require_form_size(x_, form_, "TangentSym");
  const Mat& j = form_.j();
  const double defect = (x_ * j - j * x_.transpose()).norm();
  if (defect > 1e-12 * std::max(1.0, x_.norm())) {
    std::ostringstream os;
    os << "||XJ - JX^T||_F = " << defect;
    throw Error(ErrorKind::NotInLts, os.str());
  }
}

SigMatrix f_map(const TangentSym& x) {
  const SignatureForm& form = x.form();
  return SigMatrix::from_computed(mat_exp(2.0 * x.matrix()) * form.j(), form);
}

TangentSym f_inv(const SigMatrix& l, double tol) {
  const SignatureForm& form = l.form();
  const Mat& j = form.j();
  Mat x;
  try {
    x = 0.5 * mat_log(l.matrix() * j, tol);
  } catch (const Error& e) {
    if (!is_domain_failure(e)) throw;
    throw Error(ErrorKind::OutsideChart, std::string("LJ: ") + e.what());
  }
  // Remove the rounding-level component outside sym_J(n): X = J Xᵀ J there.
  x = 0.5 * (x + j * x.transpose() * j).eval();
  return TangentSym(std::move(x), form);
}

PolarFactors gpd_factorize(const Mat& a, const SignatureForm& form, double tol) {
  require_form_size(a, form, "gpd_factorize");
  const Mat& j = form.j();
  PolarFactors out;
  try {
    out.p = mat_sqrt(a * j * a.transpose() * j, tol);
  } catch (const Error& e) {
    if (!is_domain_failure(e)) throw;
    throw Error(ErrorKind::GpdDomain, std::string("AJA^TJ: ") + e.what());
  }
  out.q = out.p.partialPivLu().solve(a);
  return out;
}

SigMatrix base_from_factor(const Mat& abar, const SignatureForm& form) {
  require_form_size(abar, form, "base_from_factor");
  return SigMatrix::from_computed(abar * form.j() * abar.transpose(), form);
}

SigMatrix geodesic_symmetry(const SigMatrix& l) {
  const Mat& j = l.form().j();
  return SigMatrix::from_computed(j * l.matrix().inverse() * j, l.form());
}

SigChart::SigChart(SigMatrix base, SigChartOptions options)
    : base_(std::move(base)), options_(options) {
  const Mat& b = base_.matrix();
  base_inv_ = b.partialPivLu().inverse();
  fast_ = options_.spd_fast_path && base_.form().is_identity() &&
          (b - Mat::Identity(n(), n())).cwiseAbs().maxCoeff() == 0.0;
}

Mat SigChart::to_tangent(const SigMatrix& l) const {
  if (!(l.form() == base_.form())) {
    throw Error(ErrorKind::Shape, "datum and base have different signature forms");
  }
  if (fast_) return sym_log(l.matrix());
  try {
    return mat_log(base_inv_ * l.matrix(), options_.spectrum_tol);
  } catch (const Error& e) {
    if (!is_domain_failure(e)) throw;
    throw Error(ErrorKind::OutsideChart, std::string("base^-1 L: ") + e.what());
  }
}

Mat SigChart::ambient_value(const Mat& t) const {
  if (fast_) return sym_exp(0.5 * (t + t.transpose()));
  return base_.matrix() * mat_exp(t);
}

SigMatrix SigChart::from_tangent(const Mat& t) const {
  return SigMatrix::from_computed(ambient_value(t), base_.form());
}

Mat SigChart::differential(const Mat& t, const Mat& y) const {
  return base_.matrix() * dexp(t, y);
}

Mat SigChart::second_differential(const Mat& t, const Mat& y, const Mat& z, const Mat& w) const {
  return base_.matrix() * d2exp(t, y, z, w);
}

SigMatrix interpolate_sig(std::span<const SigMatrix> data, const ShapeSet& shapes,
                          const Eigen::VectorXd& x, const SigMatrix& base,
                          const SigChartOptions& options) {
  const InterpolationProblem<SigMatrix> problem{data, shapes, x};
  return interpolate(problem, SigChart(base, options));
}

SigMatrix interpolate_sig_weighted(std::span<const SigMatrix> data, const Eigen::VectorXd& weights,
                                   const SigMatrix& base, const SigChartOptions& options) {
  return interpolate_weighted(data, weights, SigChart(base, options));
}

KarcherResult<SigMatrix> interpolate_sig_karcher_weighted(std::span<const SigMatrix> data,
                                                          const Eigen::VectorXd& weights,
                                                          std::optional<SigMatrix> initial,
                                                          const KarcherOptions& karcher,
                                                          const SigChartOptions& options) {
  if (data.empty()) throw Error(ErrorKind::Shape, "interpolation needs at least one datum");
  if (static_cast<Eigen::Index>(data.size()) != weights.size()) {
    throw Error(ErrorKind::Shape, "weight count does not match data count");
  }
  SigMatrix start = initial ? std::move(*initial) : data[largest_weight_index(weights)];
  return interpolate_karcher_weighted<SigMatrix>(
      data, weights, [&](const SigMatrix& b) { return SigChart(b, options); }, std::move(start),
      karcher);
}

KarcherResult<SigMatrix> interpolate_sig_karcher(std::span<const SigMatrix> data,
                                                 const ShapeSet& shapes, const Eigen::VectorXd& x,
                                                 std::optional<SigMatrix> initial,
                                                 const KarcherOptions& karcher,
                                                 const SigChartOptions& options) {
  const InterpolationProblem<SigMatrix> problem{data, shapes, x};
  check_problem(problem);
  return interpolate_sig_karcher_weighted(data, shapes.values(x), std::move(initial), karcher,
                                          options);
}

InterpolantJet interpolate_sig_derivatives(std::span<const SigMatrix> data, const ShapeSet& shapes,
                                           const Eigen::VectorXd& x, const SigMatrix& base,
                                           const SigChartOptions& options) {
  const InterpolationProblem<SigMatrix> problem{data, shapes, x};
  return interpolate_jet(problem, SigChart(base, options));
}

}  // namespace symspace::sig
