#include "blockmoments/cli.hpp"

int main(int argc, char** argv) { return blockmoments::cli::run(argc, argv); }
