#include <iostream>

#include "eulerloc/cli.hpp"

int main(int argc, char** argv)
{
    return eulerloc::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
