#include <iostream>
#include <string>
#include <vector>

#include "grkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grkit::cli::run(std::move(args), std::cout, std::cerr);
}
