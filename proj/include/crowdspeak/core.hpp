#pragma once

// Shared error types, seeded RNG, hashing and small file helpers used by
// every pipeline stage.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace crowdspeak {

// ---------------------------------------------------------------------------
// Errors. Each stage throws a typed error; the CLI maps the type to an exit
// code (missing input -> 2, validation -> 3, leakage -> 4).

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {      // missing/unreadable/unwritable files
public:
  using Error::Error;
};
class ParseError : public Error {   // malformed content (carries line info in message)
public:
  using Error::Error;
};
class SchemaError : public Error {  // well-formed but wrong shape (e.g. kp count != 25)
public:
  using Error::Error;
};
class RangeError : public Error {   // window/index outside the data
public:
  using Error::Error;
};
class ConfigError : public Error {  // bad or unknown configuration
public:
  using Error::Error;
};
class GeometryError : public Error { // degenerate homography / horizon points
public:
  using Error::Error;
};
class FitError : public Error {     // model fitting failed (degenerate data, divergence)
public:
  using Error::Error;
};
class LeakageError : public Error { // train/test group overlap
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Seeded RNG. Distributions are implemented by hand on top of mt19937_64 so
// that streams are identical across standard libraries; every randomized
// stage derives a sub-stream via mix() so parallel generation order never
// changes output.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0,1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // integer in [0,n)
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

  double normal() {
    // Box-Muller, one value per call (cache the pair)
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  double exponential(double mean) {
    double u = 0.0;
    while (u <= 1e-300) u = uniform();
    return -mean * std::log(u);
  }

  // Knuth; fine for the small means used by the generator
  int poisson(double mean) {
    double l = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return k - 1;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  Rng sub(std::uint64_t stream) const { return Rng(mix_seed(seed_of_, stream)); }

  static Rng seeded(std::uint64_t seed) {
    Rng r(splitmix64(seed));
    r.seed_of_ = seed;
    return r;
  }

private:
  std::mt19937_64 engine_;
  std::uint64_t seed_of_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// ---------------------------------------------------------------------------
// FNV-1a 64-bit, used for config hashes embedded in artifacts.

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

std::string hex64(std::uint64_t v);

// ---------------------------------------------------------------------------
// File helpers.

std::string read_text_file(const std::filesystem::path& path);
// Writes via temp file + rename so partially written artifacts never exist.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);
void write_binary_file_atomic(const std::filesystem::path& path,
                              const void* data, std::size_t size);

// ---------------------------------------------------------------------------
// parallel_for: splits [0,n) into one contiguous chunk per worker. Callers
// combine per-chunk results in chunk order, which keeps reductions
// deterministic regardless of scheduling.

void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t begin, std::size_t end,
                                              int chunk)>& fn);

int default_threads();

}  // namespace crowdspeak
