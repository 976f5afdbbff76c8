#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return sigma0::cli::run(argc, argv, std::cout, std::cerr); }
