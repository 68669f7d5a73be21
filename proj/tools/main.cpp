#include <iostream>

#include "csq/cli.hpp"

int main(int argc, char** argv) { return csq::run_cli(argc, argv, std::cout, std::cerr); }
