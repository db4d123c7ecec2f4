#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seaweed {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// bad user input (invalid type/rank, non-closed member set, mismatched compositions, ...)
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// consistency self-check failed (Jacobi violation and friends); a bug, never user error
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

// Deterministic, platform-independent generator (splitmix64). Used for oracle
// sampling so identical seeds give byte-identical results everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], rejection sampled
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  // decorrelated stream for trial t under the same user seed
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    Rng mix(seed ^ (0xd1342543de82ef95ULL * (trial + 1)));
    mix.next();
    return mix;
  }

 private:
  std::uint64_t state_;
};

}  // namespace seaweed
