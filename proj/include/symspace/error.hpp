// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symspace {

enum class ErrorKind {
  ExpOverflow,
  LogBranch,
  Singular,
  SqrtNonconvergence,
  Shape,
  DegenerateSignature,
  SignatureMismatch,
  UnsupportedBasis,
  NotInLts,
  OutsideChart,
  GpdDomain,
  KarcherDivergence,
  NotHorizontal,
  CutLocus,
  Rank,
  Horizon,
  Parse,
};

/// Stable lower-case tag, e.g. "log-branch"; used in messages and diagnostics.
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A chart-domain failure attributed to one datum of an interpolation problem.
class DatumError : public Error {
 public:
  DatumError(ErrorKind kind, std::size_t index, const std::string& detail);

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class KarcherDivergence : public Error {
 public:
  KarcherDivergence(double residual, int iterations);

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace symspace
