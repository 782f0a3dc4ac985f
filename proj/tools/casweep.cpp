#include <iostream>

#include "casweep/cli.hpp"

int main(int argc, char** argv) {
    return casweep::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
