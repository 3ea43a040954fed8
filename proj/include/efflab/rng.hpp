#ifndef EFFLAB_RNG_HPP
#define EFFLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

namespace efflab {

// Seeded RNG wrapper. Law suites derive one stream per (seed, tag) so that
// results do not depend on evaluation order or thread scheduling.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    Rng(uint64_t seed, const std::string& tag) : gen_(mix(seed, tag)) {}

    double normal() { return normal_(gen_); }
    double uniform() { return uniform_(gen_); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }
    uint64_t next_u64() { return gen_(); }

    static uint64_t mix(uint64_t seed, const std::string& tag) {
        // FNV-1a over the tag, xor-folded with the seed.
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : tag) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h ^ (seed * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);
    }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace efflab

#endif  // EFFLAB_RNG_HPP
