#pragma once

#include <string>

#include "prabhakar/cli.hpp"

namespace prabhakar::cli {

// number formatting shared by the writers
std::string format_double(double v);

/// Invariant suites for `verify`. Sets exit_code 1 if any check fails,
/// 2 for an unknown suite.
RunOutcome run_verify(const RunConfig& config);

}  // namespace prabhakar::cli
