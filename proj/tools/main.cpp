#include <iostream>

#include "curvrec/cli.hpp"

int main(int argc, char** argv) { return curvrec::cli::run(argc, argv, std::cout, std::cerr); }
