#include "cli_app.hpp"

#include <unistd.h>

#include <iostream>

int main(int argc, char** argv) {
    return gaussbin::cli::run(argc, argv, std::cout, std::cerr, ::isatty(STDOUT_FILENO) != 0);
}
