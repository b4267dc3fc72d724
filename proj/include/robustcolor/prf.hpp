#ifndef ROBUSTCOLOR_PRF_HPP
#define ROBUSTCOLOR_PRF_HPP

#include <cstdint>
#include <random>

namespace robustcolor {

inline constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Keyed pseudorandom function over small integer tuples. All per-vertex
// palette lists are derived lazily from this, so the only stored randomness
// is the 64-bit key.
class Prf {
public:
    explicit Prf(std::uint64_t key)
        : key_(splitmix64(key ^ 0x5851f42d4c957f2dULL))
    {
    }

    std::uint64_t word(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const
    {
        std::uint64_t h = key_;
        h = splitmix64(h ^ a);
        h = splitmix64(h ^ (b + 0x9e3779b97f4a7c15ULL));
        h = splitmix64(h ^ (c + 0xc2b2ae3d27d4eb4fULL));
        return h;
    }

    // Uniform in [0, bound). Modulo bias is < bound / 2^64, irrelevant at the
    // palette sizes used here.
    std::uint32_t uniform(std::uint64_t a, std::uint64_t b, std::uint64_t c,
        std::uint32_t bound) const
    {
        return static_cast<std::uint32_t>(word(a, b, c) % bound);
    }

    std::uint64_t derive(std::uint64_t tag) const { return word(tag, 0x6b79ULL); }

private:
    std::uint64_t key_;
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0)
{
    return splitmix64(splitmix64(master ^ a) ^ (b + 0x94d049bb133111ebULL));
}

inline std::mt19937_64 make_engine(std::uint64_t seed)
{
    return std::mt19937_64(splitmix64(seed));
}

} // namespace robustcolor

#endif
