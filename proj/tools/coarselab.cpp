#include <iostream>
#include <string>
#include <vector>

#include "coarselab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return coarselab::run(args, std::cout, std::cerr);
}
