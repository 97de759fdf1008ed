#include <iostream>

#include "nlbell/cli.hpp"

int main(int argc, char** argv) { return nlbell::cli::run(argc, argv, std::cout, std::cerr); }
