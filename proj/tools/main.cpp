#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return likepowers::cli::run(argc, argv, std::cout, std::cerr); }
