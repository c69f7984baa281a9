#include <iostream>

#include "disclosure/app/cli.hpp"

int main(int argc, char** argv) { return disclosure::app::run(argc, argv, std::cout, std::cerr); }
