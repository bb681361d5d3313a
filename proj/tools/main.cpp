// Copyright 2026 The ztchain Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "ztchain/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ztchain::cli::dispatch(args, std::cout, std::cerr);
}
