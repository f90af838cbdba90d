#include <iostream>
#include <string>
#include <vector>

#include "beansub_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return beansub::cli::run(args, std::cout, std::cerr);
}
