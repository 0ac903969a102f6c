#include <iostream>

#include "idiv/cli.hpp"

int main(int argc, char** argv) {
    return idiv::run_cli(argc, argv, std::cout, std::cerr);
}
