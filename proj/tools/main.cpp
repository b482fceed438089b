// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return fqlcu::cli::run_cli(argc, argv, std::cout, std::cerr);
}
