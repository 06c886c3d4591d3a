#include <iostream>

#include "morsewp_cli/commands.hpp"

int main(int argc, char** argv) { return morsewp::cli::run_cli(argc, argv, std::cout, std::cerr); }
