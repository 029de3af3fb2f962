#include <iostream>

#include "unif/report.hpp"

int main(int argc, char** argv) { return unif::run_cli(argc, argv, std::cout, std::cerr); }
