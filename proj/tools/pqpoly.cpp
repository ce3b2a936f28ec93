#include <iostream>

#include "pqpoly/cli.hpp"

int main(int argc, char** argv) { return pqpoly::run_cli(argc, argv, std::cout, std::cerr); }
