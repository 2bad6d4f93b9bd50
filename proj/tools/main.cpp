#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
    const char* noColor = std::getenv("NO_COLOR");
    const bool color = isatty(STDOUT_FILENO) && !(noColor && *noColor);
    return trinomax::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr, color);
}
