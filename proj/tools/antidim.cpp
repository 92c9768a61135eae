#include "antidim/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv, argv + argc);
    return antidim::cli::run(args, std::cout, std::cerr);
}
