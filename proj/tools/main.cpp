#include <iostream>

#include "ddo/cli.hpp"

int main(int argc, char** argv) { return ddo::cli::run(argc, argv, std::cout, std::cerr); }
