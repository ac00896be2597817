#include "symflex/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return symflex::run({ argv + 1, argv + argc }, std::cin, std::cout, std::cerr);
}
