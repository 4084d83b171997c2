#include <iostream>
#include <string>
#include <vector>

#include "cohomkern/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cohomkern::cli::run(std::move(args), std::cout, std::cerr);
}
