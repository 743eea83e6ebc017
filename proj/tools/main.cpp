#include <iostream>
#include <vector>

#include "snakefrac/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return snakefrac::dispatch(args, std::cout, std::cerr);
}
