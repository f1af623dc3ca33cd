#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return exprimes::cli::run(argc, argv, std::cout, std::cerr); }
