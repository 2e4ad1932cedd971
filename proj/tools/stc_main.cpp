#include <iostream>

#include "stc/cli.h"

int main(int argc, char** argv) { return stc::run_cli(argc, argv, std::cout, std::cerr); }
