#include "tightcut/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return tightcut::cli::run(args);
}
