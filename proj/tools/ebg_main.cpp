#include "ebg/cli.hpp"

int main(int argc, char** argv) { return ebg::cli_main(argc, argv); }
