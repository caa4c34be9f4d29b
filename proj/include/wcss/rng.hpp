#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace wcss {

// splitmix64 finalizer; good avalanche, cheap.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives one 64-bit stream key from (seed, id0, id1, ...).  Trials, purposes
// and time indices are folded in so every sensing window gets its own stream
// no matter how work is split across threads.
inline std::uint64_t substream_key(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t id : path)
        h = mix64(h ^ (id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    return h;
}

class rng {
public:
    explicit rng(std::uint64_t key) : gen_(key) {}

    static rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        return rng(substream_key(seed, path));
    }

    // Uniform on (0,1]; never returns 0 so it is safe under log().
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;
    }

    // Circularly-symmetric complex Gaussian with E|z|^2 = var, via the polar
    // (Box-Muller) transform.  Hand-rolled so streams are identical across
    // standard library implementations.
    std::complex<double> cgauss(double var) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-var * std::log(u1));
        const double ph = 2.0 * 3.141592653589793238462643383279502884 * u2;
        return {r * std::cos(ph), r * std::sin(ph)};
    }

private:
    std::mt19937_64 gen_;
};

} // namespace wcss
