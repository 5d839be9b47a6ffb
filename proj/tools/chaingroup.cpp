#include <iostream>
#include <string>
#include <vector>

#include "chaingroup/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto out = chaingroup::cli::dispatch(args, std::cin);
    (out.status == 0 || out.status == 1 ? std::cout : std::cerr) << out.report;
    return out.status;
}
