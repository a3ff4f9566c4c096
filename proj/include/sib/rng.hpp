#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sib {

// Stable 64-bit FNV-1a. Used for the experiment seed scheme so that cell
// seeds survive recompilation and config edits (std::hash gives no such
// guarantee).
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    char buf[32];
    int n = 0;
    std::uint64_t v = seed;
    do {
        buf[n++] = static_cast<char>('0' + (v % 10));
        v /= 10;
    } while (v != 0);
    std::uint64_t h = fnv1a(std::string_view(buf, static_cast<std::size_t>(n)));
    h = fnv1a("|", h);
    return fnv1a(tag, h);
}

// One seeded random stream per trial. All simulation randomness flows
// through this wrapper so a (seed, call sequence) pair fully determines
// the output stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    double gaussian() { return normal_(gen_); }

    // Uniform integer in [0, n).
    int uniform_int(int n) {
        return std::uniform_int_distribution<int>(0, n - 1)(gen_);
    }

    long uniform_long(long n) {
        return std::uniform_int_distribution<long>(0, n - 1)(gen_);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sib
