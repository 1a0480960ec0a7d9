#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace superfrieze {

/// Command-line dispatcher; exit codes: 0 success, 1 check failure,
/// 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace superfrieze
