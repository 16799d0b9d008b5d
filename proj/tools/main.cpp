#include <iostream>

#include "mincone/cli.hpp"

int main(int argc, char** argv) { return mincone::run_cli(argc, argv, std::cout, std::cerr); }
