#include "vpv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vpv::cli::run(argc, argv, std::cout, std::cerr); }
