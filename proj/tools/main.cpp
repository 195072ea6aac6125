#include "qident/cli.hpp"

int main(int argc, char** argv) { return qident::cli::run(argc, argv); }
