// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/matfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "symspace/quadrature.hpp"

namespace symspace {

namespace {

void require_finite(const Mat& a, const char* what) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw Error(ErrorKind::Shape, std::string(what) + ": empty matrix");
  }
  if (!a.allFinite()) {
    throw Error(ErrorKind::Shape, std::string(what) + ": non-finite entry");
  }
}

void require_square(const Mat& a, const char* what) {
  require_finite(a, what);
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << a.rows() << "x" << a.cols();
    throw Error(ErrorKind::Shape, os.str());
  }
}

double norm1(const Mat& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

// Coefficients of the diagonal [m/m] Padé approximants to exp.
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                           30270240.0,    2162160.0,    110880.0,     3960.0,
                                           90.0,          1.0};
constexpr std::array<double, 14> kPade13 = {64764752532480000.0,
                                            32382376266240000.0,
                                            7771770303897600.0,
                                            1187353796428800.0,
                                            129060195264000.0,
                                            10559470521600.0,
                                            670442572800.0,
                                            33522128640.0,
                                            1323241920.0,
                                            40840800.0,
                                            960960.0,
                                            16380.0,
                                            182.0,
                                            1.0};

// 1-norm bounds below which the degree-m approximant needs no scaling.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <std::size_t N>
Mat pade_low(const Mat& a, const std::array<double, N>& b) {
  const Eigen::Index n = a.rows();
  const Mat ident = Mat::Identity(n, n);
  const Mat a2 = a * a;
  Mat power = ident;
  Mat u_inner = Mat::Zero(n, n);
  Mat v = Mat::Zero(n, n);
  for (std::size_t j = 0; 2 * j + 1 < N; ++j) {
    v += b[2 * j] * power;
    u_inner += b[2 * j + 1] * power;
    power = power * a2;
  }
  const Mat u = a * u_inner;
  return (v - u).partialPivLu().solve(v + u);
}

Mat pade13(const Mat& a) {
  const auto& b = kPade13;
  const Eigen::Index n = a.rows();
  const Mat ident = Mat::Identity(n, n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat u_inner =
      a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  const Mat u = a * u_inner;
  const Mat v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  return (v - u).partialPivLu().solve(v + u);
}

Eigen::VectorXcd eigenvalues(const Mat& a) {
  Eigen::EigenSolver<Mat> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Shape, "eigenvalue iteration did not converge");
  }
  return solver.eigenvalues();
}

// Shared domain test for the principal sqrt and log.
void require_principal_domain(const Mat& a, double tol, const char* what) {
  require_square(a, what);
  const Eigen::VectorXcd lambda = eigenvalues(a);
  const double scale = a.norm();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) <= tol * scale) {
      std::ostringstream os;
      os << what << ": matrix is singular (eigenvalue " << lambda(i) << ")";
      throw Error(ErrorKind::Singular, os.str());
    }
  }
  const SpectrumCheck check = spectrum_check(a, tol);
  if (check.has_negative_real_eigenvalue) {
    std::ostringstream os;
    os << what << ": eigenvalue " << *check.offending << " on the closed negative real axis";
    throw Error(ErrorKind::LogBranch, os.str());
  }
}

constexpr int kSqrtMaxIter = 50;
constexpr double kSqrtTarget = 1e-14;

// Scaled product-form Denman–Beavers iteration; the caller has checked the
// domain.
Mat db_sqrt(const Mat& a) {
  const Eigen::Index n = a.rows();
  const Mat ident = Mat::Identity(n, n);
  Mat m = a;
  Mat y = a;
  double residual = (m - ident).norm();
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kSqrtMaxIter && residual > kSqrtTarget; ++k) {
    const Eigen::PartialPivLU<Mat> lu(m);
    const Mat m_inv = lu.inverse();
    double mu = 1.0;
    if (residual > 1e-2) {
      // |det M|^(-1/(2n)), accumulated in logs to avoid overflow.
      const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
      const double log_det = diag.array().log().sum();
      mu = std::exp(-log_det / (2.0 * static_cast<double>(n)));
    }
    const double mu2 = mu * mu;
    y = 0.5 * mu * y * (ident + m_inv / mu2);
    m = 0.5 * (ident + 0.5 * (mu2 * m + m_inv / mu2));
    previous = residual;
    residual = (m - ident).norm();
    // Rounding floor reached: further steps only add noise.
    if (residual < 1e-8 && residual >= previous) break;
  }
  if (!(residual < 1e-8) || !y.allFinite()) {
    std::ostringstream os;
    os << "square root iteration stalled at residual " << residual;
    throw Error(ErrorKind::SqrtNonconvergence, os.str());
  }
  return y;
}

constexpr int kLogPadeDegree = 8;
constexpr double kLogSqrtThreshold = 0.25;
constexpr int kLogMaxSqrt = 64;

}  // namespace

SpectrumCheck spectrum_check(const Mat& a, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Shape, "spectrum_check: tolerance must be positive");
  require_square(a, "spectrum_check");
  const Eigen::VectorXcd lambda = eigenvalues(a);
  SpectrumCheck out;
  out.tolerance_used = tol;
  out.min_real_part_on_axis = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const std::complex<double> l = lambda(i);
    if (std::abs(l.imag()) > tol) continue;
    out.min_real_part_on_axis = std::min(out.min_real_part_on_axis, l.real());
    if (l.real() <= tol && !out.has_negative_real_eigenvalue) {
      out.has_negative_real_eigenvalue = true;
      out.offending = l;
    }
  }
  return out;
}

Mat mat_exp(const Mat& a) {
  require_square(a, "mat_exp");
  const double nrm = norm1(a);
  if (nrm <= kTheta3) return pade_low(a, kPade3);
  if (nrm <= kTheta5) return pade_low(a, kPade5);
  if (nrm <= kTheta7) return pade_low(a, kPade7);
  if (nrm <= kTheta9) return pade_low(a, kPade9);

  const int s = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / kTheta13))));
  if (s > 1000) throw Error(ErrorKind::ExpOverflow, "mat_exp: norm too large");
  Mat r = pade13(a / std::ldexp(1.0, s));
  for (int i = 0; i < s; ++i) r = r * r;
  if (!r.allFinite()) throw Error(ErrorKind::ExpOverflow, "mat_exp: result overflowed");
  return r;
}

Mat mat_sqrt(const Mat& a, double tol) {
  require_principal_domain(a, tol, "mat_sqrt");
  return db_sqrt(a);
}

Mat mat_log(const Mat& a, double tol) {
  require_principal_domain(a, tol, "mat_log");
  const Eigen::Index n = a.rows();
  const Mat ident = Mat::Identity(n, n);

  Mat x = a;
  int s = 0;
  while ((x - ident).norm() >= kLogSqrtThreshold) {
    if (s == kLogMaxSqrt) {
      throw Error(ErrorKind::SqrtNonconvergence, "mat_log: square roots failed to approach I");
    }
    x = db_sqrt(x);
    ++s;
  }

  // log(I + E) = ∫₀¹ E (I + tE)⁻¹ dt; the m-point Gauss rule is the [m/m] Padé approximant.
  const Mat e = x - ident;
  static const GaussRule rule = gauss_legendre(kLogPadeDegree);
  Mat r = Mat::Zero(n, n);
  for (int j = 0; j < kLogPadeDegree; ++j) {
    r += rule.weights[j] * (ident + rule.points[j] * e).partialPivLu().solve(e);
  }
  return std::ldexp(1.0, s) * r;
}

Mat dexp(const Mat& x, const Mat& y) {
  require_square(x, "dexp");
  require_square(y, "dexp");
  if (x.rows() != y.rows()) throw Error(ErrorKind::Shape, "dexp: X and Y differ in size");
  const Eigen::Index n = x.rows();
  Mat block = Mat::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = x;
  block.topRightCorner(n, n) = y;
  block.bottomRightCorner(n, n) = x;
  return mat_exp(block).topRightCorner(n, n);
}

Mat d2exp(const Mat& x, const Mat& y, const Mat& z, const Mat& w) {
  for (const Mat* m : {&x, &y, &z, &w}) require_square(*m, "d2exp");
  const Eigen::Index n = x.rows();
  if (y.rows() != n || z.rows() != n || w.rows() != n) {
    throw Error(ErrorKind::Shape, "d2exp: arguments differ in size");
  }
  Mat block = Mat::Zero(4 * n, 4 * n);
  for (int i = 0; i < 4; ++i) block.block(i * n, i * n, n, n) = x;
  block.block(0, n, n, n) = y;
  block.block(0, 2 * n, n, n) = z;
  block.block(0, 3 * n, n, n) = w;
  block.block(n, 3 * n, n, n) = z;
  block.block(2 * n, 3 * n, n, n) = y;
  return mat_exp(block).block(0, 3 * n, n, n);
}

ThinSvd thin_svd(const Mat& a) {
  require_finite(a, "thin_svd");
  if (a.rows() < a.cols()) throw Error(ErrorKind::Shape, "thin_svd: requires rows >= cols");
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ThinSvd out{svd.matrixU(), svd.singularValues(), svd.matrixV()};
  // Sign convention: the largest-magnitude entry of each right singular vector is positive.
  for (Eigen::Index j = 0; j < out.v.cols(); ++j) {
    Eigen::Index imax = 0;
    out.v.col(j).cwiseAbs().maxCoeff(&imax);
    if (out.v(imax, j) < 0.0) {
      out.v.col(j) *= -1.0;
      out.u.col(j) *= -1.0;
    }
  }
  return out;
}

Signature sym_signature(const Mat& s) {
  require_square(s, "sym_signature");
  const double scale = s.norm();
  if ((s - s.transpose()).norm() > 1e-12 * std::max(scale, 1e-300)) {
    throw Error(ErrorKind::Shape, "sym_signature: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(s, Eigen::EigenvaluesOnly);
  const Vec lambda = solver.eigenvalues();
  const double spread = lambda.cwiseAbs().maxCoeff();
  Signature sig;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) <= 1e-10 * spread || spread == 0.0) {
      std::ostringstream os;
      os << "sym_signature: eigenvalue " << lambda(i) << " is numerically zero";
      throw Error(ErrorKind::DegenerateSignature, os.str());
    }
    (lambda(i) > 0.0 ? sig.num_positive : sig.num_negative) += 1;
  }
  return sig;
}

namespace {

template <typename F>
Mat sym_apply(const Mat& s, F&& f, const char* what) {
  require_square(s, what);
  Eigen::SelfAdjointEigenSolver<Mat> solver(s);
  const Vec lambda = solver.eigenvalues();
  Vec mapped(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) mapped(i) = f(lambda(i));
  const Mat& q = solver.eigenvectors();
  return q * mapped.asDiagonal() * q.transpose();
}

void require_positive(const Mat& s, const char* what) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(s, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  if (lo <= 0.0) {
    std::ostringstream os;
    os << what << ": eigenvalue " << lo << " is not positive";
    throw Error(lo == 0.0 ? ErrorKind::Singular : ErrorKind::LogBranch, os.str());
  }
}

}  // namespace

Mat sym_exp(const Mat& s) {
  return sym_apply(s, [](double l) { return std::exp(l); }, "sym_exp");
}

Mat sym_log(const Mat& s) {
  require_square(s, "sym_log");
  require_positive(s, "sym_log");
  return sym_apply(s, [](double l) { return std::log(l); }, "sym_log");
}

Mat sym_sqrt(const Mat& s) {
  require_square(s, "sym_sqrt");
  require_positive(s, "sym_sqrt");
  return sym_apply(s, [](double l) { return std::sqrt(l); }, "sym_sqrt");
}

}  // namespace symspace
