#include "modsupp/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return modsupp::cli::run(argc, argv, std::cout, std::cerr);
}
