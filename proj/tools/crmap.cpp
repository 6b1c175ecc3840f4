#include <iostream>

#include "crmap/cli.hpp"

int main(int argc, char** argv) { return crmap::run_cli(argc, argv, std::cout, std::cerr); }
