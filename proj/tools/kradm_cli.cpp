#include <iostream>

#include "kradm/cli.hpp"

int main(int argc, char** argv) { return kradm::cli::run(argc, argv, std::cout, std::cerr); }
