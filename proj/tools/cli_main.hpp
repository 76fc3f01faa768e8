#pragma once

/// Entry point of the command-line tool, callable in-process by tests.
int milef_cli_main(int argc, const char* const* argv);
