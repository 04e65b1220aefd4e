#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return magiclab::cli::run(argc, argv, std::cout, std::cerr);
}
