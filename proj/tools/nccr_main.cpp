#include "nccr/cli.hpp"

int main(int argc, char** argv) { return nccr::run_cli(argc, argv); }
