#include <iostream>

#include "aode/cli.hpp"

int main(int argc, char** argv) { return aode::run_cli(argc, argv, std::cout, std::cerr); }
