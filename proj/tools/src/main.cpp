#include <iostream>

#include "nsg_cli/cli.hpp"

int main(int argc, char** argv) { return nsg::cli::run(argc, argv, std::cout, std::cerr); }
