#include <iostream>

#include "koch_tools/cli.hpp"

int main(int argc, char** argv) { return koch::tools::run(argc, argv, std::cout, std::cerr); }
