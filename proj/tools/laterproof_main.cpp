#include <iostream>
#include <vector>

#include "laterproof/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return laterproof::run_cli(args, std::cout, std::cerr);
}
