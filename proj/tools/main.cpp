#include <iostream>
#include <vector>

#include "moplex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return moplex::cli::run(args, std::cout, std::cerr);
}
