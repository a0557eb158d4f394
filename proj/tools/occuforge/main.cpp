// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return occu::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
