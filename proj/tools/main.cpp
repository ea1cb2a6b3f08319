#include <iostream>

#include "runner.hpp"

int main(int argc, char** argv) { return kplane::cli::main(argc, argv, std::cout, std::cerr); }
