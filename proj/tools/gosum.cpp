#include <iostream>

#include <gosum/cli.hpp>

int main(int argc, char **argv)
{
    return gosum::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
