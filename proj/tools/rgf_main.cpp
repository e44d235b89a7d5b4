#include <iostream>

#include "rgf/cli.hpp"

int main(int argc, char** argv) {
    return rgf::cli::run(argc, argv, std::cout, std::cerr);
}
