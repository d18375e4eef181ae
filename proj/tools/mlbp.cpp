#include <iostream>

#include "mlbp/cli.hpp"

int main(int argc, char** argv) { return mlbp::run_cli(argc, argv, std::cout, std::cerr); }
