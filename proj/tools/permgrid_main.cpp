#include <iostream>

#include "permgrid/cli.hpp"

int main(int argc, char** argv) { return permgrid::cli_dispatch(argc, argv, std::cout, std::cerr); }
