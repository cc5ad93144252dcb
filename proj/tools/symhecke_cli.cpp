#include "symhecke/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return symhecke::run_cli(argc, argv, std::cout, std::cerr); }
