// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace symspace {

/// Gauss–Legendre rule on [0, 1]; exact for polynomials of degree <= 2n - 1.
struct GaussRule {
  std::vector<double> points;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

}  // namespace symspace
