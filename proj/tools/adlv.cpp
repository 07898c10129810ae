#include "adlv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return adlv::cli::run(argc, argv, std::cout, std::cerr); }
