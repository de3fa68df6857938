#include <iostream>
#include <vector>

#include "gradedmf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gmf::cli_run(args, std::cout, std::cerr);
}
