#include "lvmap/cli.hpp"

int main(int argc, char** argv) { return lvmap::cli::run(argc, argv); }
