#include <iostream>

#include "hyperfact/cli.hpp"

int main(int argc, char** argv) { return hyperfact::cli::main_entry(argc, argv, std::cout, std::cerr); }
