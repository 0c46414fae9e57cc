#include <iostream>
#include <string>
#include <vector>

#include "bjw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bjw::run_cli(args, std::cout, std::cerr);
}
