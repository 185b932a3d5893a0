#include "sector/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sector::run_cli(argc, argv, std::cout, std::cerr); }
