// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/error.hpp"

#include <sstream>

namespace symspace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ExpOverflow: return "exp-overflow";
    case ErrorKind::LogBranch: return "log-branch";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::SqrtNonconvergence: return "sqrt-nonconvergence";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::DegenerateSignature: return "degenerate-signature";
    case ErrorKind::SignatureMismatch: return "signature-mismatch";
    case ErrorKind::UnsupportedBasis: return "unsupported-basis";
    case ErrorKind::NotInLts: return "not-in-lts";
    case ErrorKind::OutsideChart: return "outside-chart";
    case ErrorKind::GpdDomain: return "gpd-domain";
    case ErrorKind::KarcherDivergence: return "karcher-divergence";
    case ErrorKind::NotHorizontal: return "not-horizontal";
    case ErrorKind::CutLocus: return "cut-locus";
    case ErrorKind::Rank: return "rank";
    case ErrorKind::Horizon: return "horizon";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

DatumError::DatumError(ErrorKind kind, std::size_t index, const std::string& detail)
    : Error(kind, "datum " + std::to_string(index) + ": " + detail), index_(index) {}

namespace {
std::string divergence_message(double residual, int iterations) {
  std::ostringstream os;
  os << "no convergence after " << iterations << " iterations, residual " << residual;
  return os.str();
}
}  // namespace

KarcherDivergence::KarcherDivergence(double residual, int iterations)
    : Error(ErrorKind::KarcherDivergence, divergence_message(residual, iterations)),
      residual_(residual),
      iterations_(iterations) {}

}  // namespace symspace
