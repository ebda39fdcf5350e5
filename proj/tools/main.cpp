#include "cli.hpp"

int main(int argc, char** argv) { return pbmotz::cli::run(argc, argv); }
