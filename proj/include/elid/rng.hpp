#pragma once

#include <cstdint>
#include <random>

namespace elid {

/// splitmix64 finalizer; used to derive independent seeds from a master seed
/// and a handful of indices.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic seed-derivation rule: iterated splitmix64 over the base
/// seed and up to three stream indices. Used for per-particle streams and
/// per-sweep-cell seeds so results do not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base);
    s = splitmix64(s ^ splitmix64(a));
    s = splitmix64(s ^ splitmix64(b));
    s = splitmix64(s ^ splitmix64(c));
    return s;
}

/// Seeded U[0,1) stream. Draws are produced from the top 53 bits of a
/// mt19937_64 output, so sequences are bit-identical across platforms and
/// standard libraries (no distribution objects involved).
class UniformStream {
  public:
    UniformStream() : engine_(0) {}
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform draw in [lo, hi).
    double next_in(double lo, double hi) { return lo + next() * (hi - lo); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace elid
