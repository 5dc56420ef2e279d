#include <iostream>

#include "ebell/cli.hpp"

int main(int argc, char** argv) { return ebell::cli::cli_main(argc, argv, std::cout, std::cerr); }
