#include "cli.hpp"

int main(int argc, char** argv) { return erate::cli::main_entry(argc, argv); }
