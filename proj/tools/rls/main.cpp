#include <iostream>

#include "rls/cli/app.hpp"

int main(int argc, char** argv) { return rls::cli::run(argc, argv, std::cout, std::cerr); }
