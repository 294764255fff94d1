#include <iostream>

#include "dirac1d/cli.hpp"

int main(int argc, char** argv) { return dirac1d::cli::run(argc, argv, std::cout, std::cerr); }
