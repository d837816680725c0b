#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace pluripot {

// Deterministic uniform double in [0,1) built from the top 53 bits of a
// mt19937_64 draw.  Identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Stable derived stream: fold a label into the seed so sub-experiments
    // stay independent of each other's draw counts.
    Rng fork(std::uint64_t label) const {
        return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (label + 1)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// Format a double with 17 significant digits (round-trip safe).
std::string format_double(double x);

// Write a file atomically (temp file + rename).  Throws std::runtime_error on
// failure (unwritable directory, rename failure).
void write_file_atomic(const std::string& path, const std::string& contents);

// Run fn(i) for i in [0, n) over `threads` workers (threads <= 1 runs inline).
// Callees must write results into slot i only; scheduling order is unspecified
// but every index runs exactly once.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace pluripot
