#include <iostream>

#include "catloc/cli.hpp"

int main(int argc, char** argv) { return catloc::run_cli(argc, argv, std::cout, std::cerr); }
