#include "cli_main.hpp"

int main(int argc, char** argv) { return milef_cli_main(argc, argv); }
