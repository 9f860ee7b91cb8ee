#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace segeuler::cli {

/// Runs the segeuler command line on the given arguments (without argv[0]).
/// Exit codes: 0 success / all verifications pass, 1 verification failure,
/// 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segeuler::cli
