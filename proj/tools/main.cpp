#include "cli.hpp"

int main(int argc, char** argv) { return entpow::cli::main_entry(argc, argv); }
