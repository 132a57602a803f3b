#include "snc/cli.hpp"

int main(int argc, char** argv) { return snc::cli::main_entry(argc, argv); }
