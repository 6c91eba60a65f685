#include <iostream>
#include <string>
#include <vector>

#include "okb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return okb::cli::run(args, std::cout);
}
