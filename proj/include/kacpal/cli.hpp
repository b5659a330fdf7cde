#pragma once

namespace kacpal::cli {

/// Entry point of the `kacpal` command; returns the process exit code.
int run(int argc, char** argv);

}  // namespace kacpal::cli
