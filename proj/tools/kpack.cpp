#include "kleinpack/mat2.hpp"

#include <cstdio>

int main() {
    std::puts("kpack: subcommands arrive with the full build");
    return 0;
}
