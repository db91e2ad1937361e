#include <iostream>

#include "mvmatch/cli.hpp"

int main(int argc, char** argv) { return mvmatch::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
