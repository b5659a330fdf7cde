#include "kacpal/cli.hpp"

int main(int argc, char** argv) { return kacpal::cli::run(argc, argv); }
