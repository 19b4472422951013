#include "sol/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return sol::cli::run(argc, argv, std::cout, std::cerr); }
