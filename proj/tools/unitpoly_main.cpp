#include "unitpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return unitpoly::cli::main_entry(argc, argv, std::cout, std::cerr); }
