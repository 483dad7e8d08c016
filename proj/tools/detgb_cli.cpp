#include <iostream>

#include "detgb/cli.hpp"

int main(int argc, char** argv) { return detgb::run_cli(argc, argv, std::cout, std::cerr); }
