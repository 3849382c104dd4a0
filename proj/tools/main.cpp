#include <iostream>

#include "greenfix/cli.hpp"

int main(int argc, char** argv) { return greenfix::cli::run(argc, argv, std::cout, std::cerr); }
