#include <iostream>
#include <string>
#include <vector>

#include "burau4/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return burau4::run_cli(args, std::cin, std::cout, std::cerr);
}
