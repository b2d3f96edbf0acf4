#include <iostream>

#include "brouwer/cli.hpp"

int main(int argc, char** argv) { return brouwer::cli::run(argc, argv, std::cout, std::cerr); }
