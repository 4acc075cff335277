#include "commands.hpp"

int main(int argc, char** argv) { return symstress::cli::run(argc, argv); }
