#include <iostream>

#include "cyclav/cli/run.hpp"

int main(int argc, char** argv) { return cyclav::cli::run(argc, argv, std::cout, std::cerr); }
