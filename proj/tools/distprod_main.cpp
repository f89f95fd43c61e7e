#include <iostream>
#include <string>
#include <vector>

#include "distprod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return distprod::cli::main_impl(args, std::cout, std::cerr);
}
