#include <iostream>

#include "degbound/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return degbound::cli::run(args, std::cout, std::cerr);
}
