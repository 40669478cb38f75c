#include <iostream>
#include <string>
#include <vector>

#include "actdim/cli.hpp"

int main(int argc, char** argv)
{
    return actdim::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
