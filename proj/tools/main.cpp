#include <iostream>

#include "shi/cli.hpp"

int main(int argc, char** argv) { return shi::run_cli(argc, argv, std::cout, std::cerr); }
