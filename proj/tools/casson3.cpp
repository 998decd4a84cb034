#include <iostream>

#include "casson3/cli.hpp"

int main(int argc, char** argv) { return casson3::run_cli(argc, argv, std::cout, std::cerr); }
