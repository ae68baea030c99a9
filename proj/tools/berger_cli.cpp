#include <iostream>

#include "berger/cli.hpp"

int main(int argc, char** argv) { return berger::run_cli(argc, argv, std::cout, std::cerr); }
