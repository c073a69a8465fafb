#include <iostream>

#include "elspal/cli.hpp"

int main(int argc, char** argv) { return elspal::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
