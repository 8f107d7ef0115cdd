#include <iostream>

#include "verma_ext/cli.hpp"

int main(int argc, char** argv) {
    return verma_ext::cli::run(argc, argv, std::cout, std::cerr);
}
