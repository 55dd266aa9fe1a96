#include "cli.hpp"

int main(int argc, char** argv) { return hurwitz::cli::main_with_group("hw", argc, argv); }
