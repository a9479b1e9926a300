#include <iostream>

#include "tritree/tools/cli.hpp"

int main(int argc, char** argv) { return tritree::tools::run_cli(argc, argv, std::cout, std::cerr); }
