#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace qrel {

// Deterministic random stream. All derived draws (uniform, normal, bounded
// ints, shuffles) are pinned to explicit algorithms on top of mt19937_64 so
// that identical seeds give identical results on every platform; the
// standard distributions leave their sequences implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // Uniform in (0, 1]; never returns 0 so it is safe under log().
    double uniform01() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; two raw draws per sample, no cached spare.
    double normal(double mean, double stddev) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform in [0, n). Modulo bias is below 2^-53 for any n used here.
    std::uint64_t bounded(std::uint64_t n) { return gen_() % n; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Stable child-stream derivation (splitmix64 over master ^ f(k)).
    static std::uint64_t derive(std::uint64_t master, std::uint64_t k) {
        std::uint64_t z = master ^ (0x9E3779B97F4A7C15ULL * (k + 1));
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace qrel
