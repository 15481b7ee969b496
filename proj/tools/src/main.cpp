#include <iostream>

#include "mopquad_cli/commands.hpp"

int main(int argc, char** argv)
{
    return mopquad::cli::run(argc, argv, std::cout, std::cerr);
}
