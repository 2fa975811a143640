#include <iostream>

#include "prabhakar/cli.hpp"

int main(int argc, char** argv) { return prabhakar::cli::main(argc, argv, std::cout, std::cerr); }
