#ifndef HEXT_CONFIG_HPP
#define HEXT_CONFIG_HPP

#include <cstdint>

namespace hext {

// Global guards.  Read-mostly: set once at process start (CLI flag or the
// HEXT_ORDER_CAP environment variable), never mutated from worker threads.
struct Limits {
  int order_cap = 512;        // largest group any constructor will materialize
  int iso_cap = 128;          // largest order isomorphism search will attempt
  int dim_cap = 4;            // largest cube dimension for recursive checks
  int bracket_dim_cap = 3;    // largest dimension for categorical brackets
  long long entry_budget = 1 << 24;  // max integer-matrix entries in the oracle
};

Limits& limits();

// Deterministic RNG.  mt19937_64 is bit-exact across platforms; the bounded
// draw avoids std::uniform_int_distribution, whose output is not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // splitmix64; stable and fully specified.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n); slight modulo bias is irrelevant here,
  // reproducibility is not.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

}  // namespace hext

#endif
