#include <iostream>

#include "vortwave/cli.hpp"

int main(int argc, char** argv) { return vortwave::run_cli(argc, argv, std::cout, std::cerr); }
