#include <iostream>

#include "weiljac_cli/app.hpp"

int main(int argc, char** argv) { return weiljac::cli::run(argc, argv, std::cout, std::cerr); }
