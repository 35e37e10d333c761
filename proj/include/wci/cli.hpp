// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wci {

/// Runs the command-line interface. Exit codes: 0 success, 1 domain error
/// (a machine-readable error object is printed), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wci
