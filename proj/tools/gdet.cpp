#include <iostream>

#include "gdet/cli.hpp"

int main(int argc, char** argv) {
    return gdet::run_cli(argc, argv, std::cout, std::cerr);
}
