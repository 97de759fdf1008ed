#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nlbell/functional.hpp"
#include "nlbell/machine.hpp"

namespace nlbell::cli {

/// Exit codes: 0 success, 1 usage or I/O error, 2 verification rejected.
enum ExitCode : int { kOk = 0, kUsage = 1, kRejected = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts CHSH, I, M, C1, C2 (with n) and the spelled-out names
/// I3322, M4422, INN22-style "I<N><N>22" / "M<N><N>22".
BellFunctional functional_by_name(const std::string& name, std::optional<int> n);

/// "pr" (PR-box) or "pr:N" (PR_N).
MachineSpec machine_by_name(const std::string& name);

}  // namespace nlbell::cli
