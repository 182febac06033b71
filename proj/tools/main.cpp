#include <iostream>

#include "csdp/cli.hpp"

int main(int argc, char** argv) { return csdp::run_cli(argc, argv, std::cout, std::cerr); }
