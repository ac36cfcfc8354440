#include "igraphs/cli.hpp"

int main(int argc, char** argv) { return igraphs::cli::run(argc, argv); }
