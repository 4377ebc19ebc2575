#include <iostream>

#include "klts/cli/app.hpp"

int main(int argc, char** argv) { return klts::run_cli(argc, argv, std::cout, std::cerr); }
