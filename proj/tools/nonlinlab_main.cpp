#include "nonlinlab/experiments.hpp"

int main(int argc, char** argv) { return nonlinlab::cli_main(argc, argv); }
