#include <iostream>

#include "holoquant/cli.hpp"

int main(int argc, char** argv) { return holoquant::cli::run(argc, argv, std::cout, std::cerr); }
