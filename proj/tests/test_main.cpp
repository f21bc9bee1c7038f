#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "support.hpp"

namespace {
std::uint64_t g_seed = 20261016;
}

namespace testing {
std::uint64_t seed() { return g_seed; }
}

// Accepts --seed N or --seed=N (also HOMLONG_SEED); every other argument goes to doctest.
int main(int argc, char** argv) {
  if (const char* env = std::getenv("HOMLONG_SEED")) g_seed = std::stoull(env);
  std::vector<char*> rest{argv[0]};
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::stoull(argv[i] + 7);
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::cout << "seed " << g_seed << "\n";
  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
