#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* dir = std::getenv(intertwine::cli::kCacheDirEnv)) env = dir;
  return intertwine::cli::run(args, std::cout, std::cerr, env);
}
