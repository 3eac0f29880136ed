#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace gssc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape/argument contract violations (wrong channel counts, mismatched sizes).
struct DimError : Error {
  using Error::Error;
};

// Malformed files and bitstreams: bad magic, version, lengths, truncation.
struct FormatError : Error {
  using Error::Error;
};

// Decoder checkpoint does not match the one the stream was encoded with.
struct CheckpointError : Error {
  using Error::Error;
};

// Numeric failures: NaN loss, non-scalar backward, divergence.
struct NumericError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// FNV-1a, used for stable name-derived seeds and checkpoint hashes.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

// Deterministic xoshiro-free uniform helpers on top of a splitmix64 core.
// std::uniform_real_distribution is implementation-defined, so parameter
// initialization and quantization noise roll their own mapping.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo,hi)
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // uniform integer in [0,n)
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }
};

// Worker cap for the few data-parallel loops (renderer rows, scene frames).
// GSSC_THREADS caps it; loops partition outputs disjointly so results do not
// depend on the thread count except for documented reduction tolerances.
int max_threads();

void parallel_for(int n, const std::function<void(int, int)>& chunk_fn);

}  // namespace gssc
