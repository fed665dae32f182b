#include <iostream>

#include "coxperron/cli.hpp"

int main(int argc, char** argv) {
    return coxperron::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
