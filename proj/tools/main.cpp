#include <iostream>

#include "sigmalat/cli.hpp"

int main(int argc, char** argv) { return sigmalat::cli::run(argc, argv, std::cout, std::cerr); }
