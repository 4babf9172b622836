#include "szeta/cli.hpp"

int main(int argc, char** argv) { return szeta::cli::main_entry(argc, argv); }
