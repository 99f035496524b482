#include "jack4/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return jack4::run_cli(argc, argv, std::cout, std::cerr);
}
