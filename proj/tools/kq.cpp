#include <iostream>
#include <string>
#include <vector>

#include "kq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return kq::run_cli(args, std::cout, std::cerr);
}
