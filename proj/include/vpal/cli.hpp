#pragma once

namespace vpal {

/// Full command-line surface. Exit codes: 0 success, 1 verification failure
/// (including negative membership verdicts), 2 usage error, 3 result unknown
/// or unavailable within budget.
int run_cli(int argc, const char* const* argv);

}  // namespace vpal
