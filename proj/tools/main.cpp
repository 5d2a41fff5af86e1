#include "monoidlab/cli.hpp"

int main(int argc, char** argv) { return monoidlab::cli::run(argc, argv); }
