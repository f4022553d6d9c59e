#include "threecircles/cli.hpp"

int main(int argc, char** argv) { return threecircles::cli::run(argc, argv); }
