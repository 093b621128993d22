#ifndef MARGINLAB_RNG_HPP
#define MARGINLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace marginlab {

// splitmix64 mixer; used to derive independent substream seeds so that
// per-draw / per-replicate streams do not depend on execution order.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for substream `stream` of a master seed (optionally sub-substream `leaf`).
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t leaf = 0) {
    return mix64(mix64(master ^ mix64(stream)) ^ mix64(leaf ^ 0xa5a5a5a5a5a5a5a5ULL));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Vector of iid Rademacher (+1/-1) multipliers.
inline std::vector<double> rademacher_vector(std::size_t n, Rng& rng) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (rng() & 1u) ? 1.0 : -1.0;
    return v;
}

// Vector of iid standard normal multipliers.
inline std::vector<double> gaussian_vector(std::size_t n, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = normal(rng);
    return v;
}

}  // namespace marginlab

#endif
