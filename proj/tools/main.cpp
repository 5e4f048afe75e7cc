#include <iostream>

#include "onefact/cli.hpp"

int main(int argc, char** argv) { return onefact::run_cli(argc, argv, std::cout, std::cerr); }
