#include <iostream>
#include <string>
#include <vector>

#include "subneg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return subneg::run_cli(std::move(args), std::cout, std::cerr);
}
