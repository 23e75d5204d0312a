#include "finquat/cli.hpp"

int main(int argc, char** argv) { return finquat::cli::run(argc, argv); }
