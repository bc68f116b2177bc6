#include <iostream>

#include "qmu/cli.hpp"

int main(int argc, char** argv) { return qmu::cli::run_cli(argc, argv, std::cout, std::cerr); }
