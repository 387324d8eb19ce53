#include <iostream>

#include "mlspec/cli.hpp"

int main(int argc, char** argv) { return mlspec::run_cli(argc, argv, std::cout, std::cerr); }
