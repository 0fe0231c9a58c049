#include "ncsym/cli/commands.hpp"

int main(int argc, char** argv) { return ncsym::cli::run(argc, argv); }
