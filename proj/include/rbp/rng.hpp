#pragma once

#include <cstdint>

namespace rbp {

// splitmix64 finalizer; bijective on u64
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream identity for one Monte Carlo trial. Streams are derived from
// (master seed, cell index, trial index) so that no two trials of a run
// share a stream and results do not depend on scheduling.
struct StreamKey {
    uint64_t k0 = 0;
    uint64_t k1 = 0;

    bool operator==(const StreamKey&) const = default;
};

inline StreamKey make_stream(uint64_t seed, uint64_t cell, uint64_t trial) {
    uint64_t a = mix64(seed ^ 0x243f6a8885a308d3ULL);
    a = mix64(a ^ mix64(cell ^ 0x13198a2e03707344ULL));
    a = mix64(a ^ mix64(trial ^ 0xa4093822299f31d0ULL));
    uint64_t b = mix64(a ^ 0x082efa98ec4e6c89ULL);
    return {a, b};
}

// Counter-based generator: draw i is a pure function of (key, i).
class CounterRng {
public:
    explicit CounterRng(StreamKey key) : key_(key) {}

    uint64_t next() { return at(ctr_++); }

    // [0, 1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    uint64_t at(uint64_t counter) const {
        return mix64(key_.k0 + counter * 0x9e3779b97f4a7c15ULL) ^ key_.k1;
    }

    uint64_t counter() const { return ctr_; }

private:
    StreamKey key_;
    uint64_t ctr_ = 0;
};

// Integer acceptance threshold for probability p: a uniform u64 draw u is a
// success iff u < threshold. Monotone in p, exact at the endpoints, so
// trials sharing draws are coupled monotonically across p.
inline uint64_t bernoulli_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return ~0ULL;
    long double t = static_cast<long double>(p) * 18446744073709551616.0L;
    if (t >= 18446744073709551615.0L) return ~0ULL;
    return static_cast<uint64_t>(t);
}

}  // namespace rbp
