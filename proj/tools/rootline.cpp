#include <iostream>

#include <unistd.h>

#include "rootline/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return rootline::cli::run(argc, argv, {std::cin, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0});
}
