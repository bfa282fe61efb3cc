#include "garside/cli.hpp"

int main(int argc, char** argv) { return garside::run_cli(argc, argv); }
