#include <iostream>

#include "polar/cli.hpp"

int main(int argc, char** argv) { return polar::run_cli(argc, argv, std::cout, std::cerr); }
