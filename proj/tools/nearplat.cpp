#include "nearplat/cli.hpp"

int main(int argc, char** argv) { return nearplat::cli_dispatch(argc, argv); }
