#include "spherefp/cli.hpp"

int main(int argc, char** argv) { return spherefp::cli::run(argc, argv); }
