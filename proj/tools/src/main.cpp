#include <iostream>

#include "polariton/cli.hpp"

int main(int argc, char** argv) {
    return polariton::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
