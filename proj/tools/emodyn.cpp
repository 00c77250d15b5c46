#include "emodyn/cli/app.hpp"

int main(int argc, char** argv) { return emodyn::cli::run(argc, argv); }
