#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "halg/cli.hpp"

int main(int argc, char** argv) {
    try {
        const std::vector<std::string> args(argv + 1, argv + argc);
        const halg::RunResult r = halg::run(args);
        std::fputs(r.output.c_str(), stdout);
        return r.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 70;
    }
}
