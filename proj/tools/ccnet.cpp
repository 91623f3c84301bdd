#include <cstdio>
#include <string>
#include <vector>

#include "ccnet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ccnet::CommandResult res = ccnet::run_command(args);
    std::fputs(res.output.c_str(), stdout);
    return res.exit_code;
}
