#include <swarmcluster/cli.hpp>

int main(int argc, char** argv) { return swarmcluster::cli_main(argc, argv); }
