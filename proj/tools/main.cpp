#include <iostream>

#include "fibdisp/cli.hpp"

int main(int argc, char** argv) {
    return fibdisp::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
