#include <iostream>

#include "tenspect/cli.hpp"

int main(int argc, char** argv) {
    return tenspect::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
