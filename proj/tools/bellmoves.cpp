#include "bellmoves/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bellmoves::cli::run(argc, argv, std::cout, std::cerr); }
