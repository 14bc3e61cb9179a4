#include <iostream>

#include "cocycles/cli.hpp"

int main(int argc, char** argv) { return cocycles::cli::run(argc, argv, std::cout, std::cerr); }
