#include "crysturn/cli.hpp"

int main(int argc, char** argv) { return crysturn::cli::run(argc, argv); }
