#include <iostream>

#include "snake/cli.hpp"

int main(int argc, char** argv) {
    return snake::cli::run_main(argc, argv, std::cout, std::cerr);
}
