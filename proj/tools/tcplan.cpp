#include <iostream>

#include <unistd.h>

#include "tcplan/cli/cli.hpp"

int main(int argc, char** argv) {
  return tcplan::cli::run_cli(argc, argv, std::cout, std::cerr, isatty(STDERR_FILENO) != 0);
}
