#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::cout << std::unitbuf;
    return lgamble::cli::run(argc, argv, std::cout, std::cerr);
}
