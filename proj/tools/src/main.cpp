#include <iostream>

#include "secant/cli/cli.hpp"

int main(int argc, char** argv) { return secant::cli::run(argc, argv, std::cout, std::cerr); }
