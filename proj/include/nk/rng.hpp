#ifndef NK_RNG_HPP
#define NK_RNG_HPP

#include <cstdint>
#include <string_view>

namespace nk {

// SplitMix64 (Steele, Lea, Flood 2014). The single seedable generator used
// everywhere in this project; all randomness is a deterministic function of
// a 64-bit seed.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0,1), 53 random bits.
    constexpr double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound > 0. Unbiased (rejection).
    constexpr std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    constexpr bool next_bernoulli(double p) noexcept { return next_double() < p; }

private:
    std::uint64_t state_;
};

// SplitMix64 finalizer as a stateless avalanche mix, used for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hash a (master seed, tag, k, replicate) tuple into an independent substream
// seed. Chained mix64 over the fields; tag bytes are folded in order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                    int k, int replicate) noexcept {
    std::uint64_t h = mix64(master);
    for (char c : tag) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(k)));
    h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(replicate)));
    return h;
}

} // namespace nk

#endif
