#include <iostream>
#include <string>
#include <vector>

#include "schurdiv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schurdiv::cli::run(args, std::cout);
}
