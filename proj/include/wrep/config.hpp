#ifndef WREP_CONFIG_HPP
#define WREP_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

namespace wrep {

// Runtime knobs shared by the numeric ring and the randomized algorithms.
// Environment variables WREP_TOL, WREP_SEED and WREP_THREADS override the
// defaults; command-line flags override both.
struct Config {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int threads = 1;
  std::size_t max_free_word_letters = 1000000;

  static Config from_env() {
    Config c;
    if (const char* s = std::getenv("WREP_TOL")) c.tolerance = std::strtod(s, nullptr);
    if (const char* s = std::getenv("WREP_SEED")) c.seed = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("WREP_THREADS")) c.threads = std::atoi(s);
    if (const char* s = std::getenv("WREP_MAX_FREE_WORD_LETTERS"))
      c.max_free_word_letters = std::strtoull(s, nullptr, 10);
    if (c.threads < 1) c.threads = 1;
    return c;
  }
};

}  // namespace wrep

#endif
