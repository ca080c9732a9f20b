#include "hnt/cli.hpp"

int main(int argc, char** argv) { return hnt::run_cli(argc, argv); }
