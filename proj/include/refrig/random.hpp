#pragma once

// Seeded sampling shared by every randomized construction.

#include "refrig/exact.hpp"

#include <cstdint>
#include <random>

namespace refrig {

// Fully determines a randomized run.
struct RunConfig {
  std::uint64_t seed = 1;
  unsigned retries = 32;             // K
  unsigned sample_bits = 20;         // integer samples in [-2^bits, 2^bits]
  unsigned epsilon_bits = 20;        // first perturbation has relative size 2^-epsilon_bits
  unsigned epsilon_shrink_bits = 10; // each retry divides the perturbation by 2^shrink
  unsigned rank_trials = 5;          // placements sampled for generic rank
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, unsigned bits) : engine_(seed), bound_(std::int64_t{1} << bits) {}

  std::int64_t integer() { return std::uniform_int_distribution<std::int64_t>(-bound_, bound_)(engine_); }

  std::int64_t nonzero_integer() {
    for (;;)
      if (auto v = integer(); v != 0) return v;
  }

  Vec2 vector() { return {Rational(integer()), Rational(integer())}; }

  Vec2 nonzero_vector() {
    for (;;)
      if (auto v = vector(); !v.is_zero()) return v;
  }

  // Neither coordinate zero: not horizontal, not vertical.
  Vec2 oblique_vector() { return {Rational(nonzero_integer()), Rational(nonzero_integer())}; }

  std::int64_t bound() const { return bound_; }

 private:
  std::mt19937_64 engine_;
  std::int64_t bound_;
};

}  // namespace refrig
