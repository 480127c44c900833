#include "vpal/cli.hpp"

int main(int argc, char** argv) { return vpal::run_cli(argc, argv); }
