#include <iostream>

#include "evoform/cli.hpp"

int main(int argc, char** argv) {
    return evoform::runCli(argc, argv, std::cout, std::cerr);
}
