#include <iostream>

#include "symspace/cli/suites.hpp"

int main(int argc, char** argv) { return symspace::cli::run_cli(argc, argv, std::cout, std::cerr); }
