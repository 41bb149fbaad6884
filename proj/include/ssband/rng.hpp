#pragma once

#include <cstdint>
#include <random>

namespace ssband {

// Stream derivation uses splitmix64 so that (seed, index...) pairs give
// well-separated states; replicate r of an experiment always draws from
// derive(seed, n_index, r) and is reproducible regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(seed ^ 0x5851f42d4c957f2dULL);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return splitmix64(s ^ c);
}

// Named generator of the artifact: "splitmix-derived mt19937_64".
// Gaussian variates use Box-Muller on explicit 53-bit uniforms, so the
// byte stream is a function of the seed alone (no library-dependent
// normal_distribution state).
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // on (0, 1]
        return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform_symmetric() {  // on [-1, 1]
        return 2.0 * static_cast<double>(eng_() >> 11) * 0x1.0p-53 - 1.0 +
               0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t next_u64() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ssband
