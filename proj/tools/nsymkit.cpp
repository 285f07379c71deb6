#include <iostream>
#include <string>
#include <vector>

#include "nsymkit/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const nsymkit::CommandResult result = nsymkit::run_cli(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
