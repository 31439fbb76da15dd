#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return omc::cli::run(argc, argv, std::cout); }
