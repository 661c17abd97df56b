#include "wallscale/cli.hpp"

int main(int argc, char** argv) { return wallscale::run_cli(argc, argv); }
