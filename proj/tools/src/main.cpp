#include <iostream>

#include "grunit_tools/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = grunit::cli::run_command(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
