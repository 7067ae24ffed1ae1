#pragma once

#include <cmath>
#include <cstdint>

namespace fdclutter {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// One-shot stateless mix of splitmix64.
inline std::uint64_t mix64(std::uint64_t x) { return splitmix64(x); }

/// xoshiro256++ with splitmix64 seeding; small, fast, reproducible across
/// platforms (unlike the standard-library distributions).
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        for (auto& word : state_) word = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int bound) {  // [0, bound)
        return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
    }

    /// Two independent standard normals (Box-Muller).
    void gaussian_pair(double& g0, double& g1) {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        g0 = r * std::cos(two_pi * u2);
        g1 = r * std::sin(two_pi * u2);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

/// Independent stream derived from (seed, stream id); order-free determinism
/// for per-trial and per-sample draws.
inline Xoshiro256pp substream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    return Xoshiro256pp(splitmix64(s));
}

}  // namespace fdclutter
