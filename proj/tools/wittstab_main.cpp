#include <iostream>

#include "wittstab/cli.hpp"

int main(int argc, char** argv) { return wittstab::run_cli(argc, argv, std::cout); }
