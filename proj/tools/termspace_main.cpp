#include <iostream>

#include <termspace/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return termspace::cli_main(args, std::cout, std::cerr);
}
