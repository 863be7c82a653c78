#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "prop.hpp"

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    // Strip --seed before doctest sees the arguments.
    std::vector<char*> rest;
    for (int i = 0; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            prop::seed() = std::stoul(argv[i] + 7);
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            prop::seed() = std::stoul(argv[++i]);
        } else {
            rest.push_back(argv[i]);
        }
    }
    std::cout << "seed " << prop::seed() << '\n';
    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
