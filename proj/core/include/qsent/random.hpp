#pragma once

// Platform-independent random streams.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The std:: distributions are implementation-defined, so the
// conversions to uniform, normal and exponential variates are written out
// here. Substreams are seeded with derive_seed(parent, index), which lets a
// population of samples (and the Kraus operators inside one sample) be drawn
// independently of evaluation order.

#include <cstdint>
#include <random>

#include "qsent/matcore.hpp"

namespace qsent {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of substream `index` under `parent`: splitmix64(parent ^ splitmix64(index + 1)).
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
    return splitmix64(parent ^ splitmix64(index + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on (0, 1) from the top 53 bits.
    double uniform();
    /// Standard normal via Box–Muller; values come in cached pairs.
    double normal();
    /// (N(0,1) + i N(0,1)) / √2, unit variance.
    Complex complex_normal();
    /// Exponential with unit rate.
    double exponential();

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// n×n matrix of i.i.d. complex_normal() entries, filled row by row.
ComplexMatrix ginibre(std::ptrdiff_t n, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
ComplexMatrix haar_unitary(std::ptrdiff_t n, Rng& rng);

} // namespace qsent
