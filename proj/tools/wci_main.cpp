// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <iostream>
#include <string>
#include <vector>

#include "wci/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wci::run_cli(args, std::cout, std::cerr);
}
