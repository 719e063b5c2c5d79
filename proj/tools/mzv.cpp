#include "mzv/cli.hpp"

int main(int argc, char** argv) { return mzv::cli_main(argc, argv); }
