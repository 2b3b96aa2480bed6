#include <iostream>

#include "pcontract/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pcontract::cli::run(args, std::cin, std::cout, std::cerr);
}
