#include "c1cox/cli.hpp"

int main(int argc, char** argv) { return c1cox::cli_main(argc, argv); }
