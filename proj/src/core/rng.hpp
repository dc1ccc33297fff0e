#ifndef LPBOX_CORE_RNG_HPP
#define LPBOX_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace lpbox {

/// Deterministic splittable generator (splitmix64 core). Every consumer of
/// randomness forks a named substream from one root seed, so outputs are
/// reproducible across platforms and insensitive to draw order elsewhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(mix(seed ^ 0x9e3779b97f4a7c15ull)), state_(seed_) {}

    /// Child stream tied to (this stream's seed, name); independent of draws.
    Rng fork(std::string_view name) const { return Rng(seed_ ^ fnv1a(name)); }

    /// Numbered child stream, e.g. one per generated instance.
    Rng fork(std::uint64_t index) const { return Rng(seed_ ^ mix(index + 0x71ull)); }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
        has_spare_ = true;
        return mag * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform index in [0, bound); bound must be positive.
    std::size_t index(std::size_t bound) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    std::uint64_t seed_;
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace lpbox

#endif
