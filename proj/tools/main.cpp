#include "relaxedchar/cli.hpp"

int main(int argc, char** argv) { return rlx::cli_run(argc, argv); }
