#include "brach/cli.hpp"

int main(int argc, char** argv)
{
    return brach::run_cli(argc, argv);
}
