#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> budget;
  if (const char* env = std::getenv("FLATLAB_BUDGET")) budget = env;
  const flatlab::cli::Outcome o = flatlab::cli::run(args, budget);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
