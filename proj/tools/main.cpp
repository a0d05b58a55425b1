#include "trisix/cli.hpp"

int main(int argc, char** argv) { return trisix::cli_main(argc, argv); }
