#include <iostream>

#include "radiogrid/io.hpp"

int main(int argc, char** argv) {
    return radiogrid::run_cli(argc, argv, std::cout, std::cerr);
}
