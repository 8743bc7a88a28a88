#include <iostream>

#include "talex/cli.hpp"

int main(int argc, char** argv)
{
    return talex::cli::run({ argv + 1, argv + argc }, std::cout, std::cerr);
}
