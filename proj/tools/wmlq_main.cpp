#include "cli.hpp"

int main(int argc, char** argv) { return wmlq::cli_main(argc, argv); }
