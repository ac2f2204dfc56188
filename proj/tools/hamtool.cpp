#include <iostream>

#include "hamilton/cli.hpp"

int main(int argc, char** argv) {
    return hamilton::run_command(argc, argv, std::cout, std::cerr);
}
