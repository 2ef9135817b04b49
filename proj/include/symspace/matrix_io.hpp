// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Text formats for fixtures.
//
// Signature matrices:
//     p q                 header: count of -1 and +1 entries of J
//     l11 l12 ... l1n     n rows per matrix, row-major
//     ...
// Grassmann bases:
//     n,p                 header
//     a11,...,a1p         n rows per basis
//     ...
//
// Entries may be separated by commas and/or whitespace. Blank lines and lines
// starting with '#' are ignored, so blocks may be separated by blank lines.
// Malformed input throws Error with kind Parse and the offending line number.

#include <iosfwd>
#include <vector>

#include "symspace/grassmann.hpp"
#include "symspace/sigspace.hpp"

namespace symspace::io {

struct SigMatrixSet {
  sig::SignatureForm form;
  std::vector<sig::SigMatrix> matrices;
};

SigMatrixSet read_sig_matrices(std::istream& in);
void write_sig_matrices(std::ostream& out, const sig::SignatureForm& form,
                        const std::vector<sig::SigMatrix>& matrices);

/// Each block is passed through orthonormalize, so any full-rank basis of the
/// intended subspace is accepted.
std::vector<grass::GrassPoint> read_grass_bases(std::istream& in);
void write_grass_bases(std::ostream& out, const std::vector<grass::GrassPoint>& bases);

}  // namespace symspace::io
