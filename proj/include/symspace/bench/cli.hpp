// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace symspace::bench {

/// Entry point of the symspace-bench tool. Subcommands `convergence` and
/// `census`. Returns 0 on success, 1 on a domain error (including elements
/// whose interpolation failed), 2 on bad arguments.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symspace::bench
