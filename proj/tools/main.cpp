#include <iostream>
#include <string>
#include <vector>

#include "explicit_lab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return explicit_lab::cli::run(args, std::cout, std::cerr);
}
