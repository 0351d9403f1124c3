#include "toricemb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    toricemb::CommandResult res = toricemb::run_command(std::move(args));
    std::cout << res.text;
    return res.exit_code();
}
