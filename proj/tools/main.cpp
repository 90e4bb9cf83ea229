#include <iostream>

#include "kjdt/cli.hpp"

int main(int argc, char** argv) { return kjdt::run_cli(argc, argv, std::cout, std::cerr); }
