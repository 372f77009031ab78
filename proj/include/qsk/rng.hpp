#ifndef QSK_RNG_HPP
#define QSK_RNG_HPP

#include <cstdint>

namespace qsk {

/* xorshift128+, hand-rolled so seeded runs are byte-identical across
   compilers and standard libraries. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the seed
        auto next = [&seed]() {
            seed += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = seed;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        s0_ = next();
        s1_ = next();
        if (s0_ == 0 && s1_ == 0)
            s1_ = 1;
    }

    std::uint64_t next() {
        std::uint64_t x = s0_, y = s1_;
        s0_ = y;
        x ^= x << 23;
        s1_ = x ^ y ^ (x >> 17) ^ (y >> 26);
        return s1_ + y;
    }

    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    /// uniform in [lo, hi]
    long long range(long long lo, long long hi) { return lo + (long long)below((std::uint64_t)(hi - lo + 1)); }

    bool coin() { return next() & 1; }

  private:
    std::uint64_t s0_, s1_;
};

} // namespace qsk

#endif
