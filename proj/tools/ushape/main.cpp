#include <iostream>

#include "ushape/cli.hpp"

int main(int argc, char** argv) { return ushape::cli_main(argc, argv, std::cout, std::cerr); }
