#include <altcone/cli.hpp>

int main(int argc, char** argv) { return altcone::cli::run_command(argc, argv); }
