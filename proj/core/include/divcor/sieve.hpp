#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace divcor {

// Smallest-prime-factor table with factorization, prime list and Moebius mu.
class SieveTable {
public:
    explicit SieveTable(std::uint64_t x_max);

    std::uint64_t x_max() const { return spf_.size() - 1; }
    // (prime, exponent) pairs, ascending primes; throws OutOfSieveRange above x_max.
    std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) const;
    // Smallest prime factor (n >= 2).
    std::uint32_t spf(std::uint64_t n) const;
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    int mobius(std::uint64_t n) const;

private:
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

}  // namespace divcor
