#include <iostream>

#include "omega/cli.hpp"

int main(int argc, char** argv) { return omega::run(argc, argv, std::cout, std::cerr); }
