#include <iostream>

#include "icsi/cli.hpp"

int main(int argc, char** argv) { return icsi::run_cli(argc, argv, std::cout, std::cerr); }
