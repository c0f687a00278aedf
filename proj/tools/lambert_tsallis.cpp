#include <iostream>

#include "lambert_tsallis/cli.hpp"

int main(int argc, char** argv) { return lt::cli::run(argc, argv, std::cout, std::cerr); }
