#include "oracle_forge/cli/dispatch.hpp"

int main(int argc, char** argv) { return oracle_forge::cli::dispatch_main(argc, argv); }
