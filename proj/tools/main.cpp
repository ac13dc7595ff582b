#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return reisner::cli::run(argc, argv, std::cout); }
