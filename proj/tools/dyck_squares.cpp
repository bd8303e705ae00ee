#include <iostream>

#include "dyck/cli.hpp"

int main(int argc, char** argv) { return dyck::cli::run(argc, argv, std::cout, std::cerr); }
