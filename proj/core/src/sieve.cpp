#include "divcor/sieve.hpp"

#include <stdexcept>

#include "divcor/errors.hpp"

namespace divcor {

SieveTable::SieveTable(std::uint64_t x_max) {
    if (x_max < 2) x_max = 2;
    if (x_max > (std::uint64_t{1} << 32) - 2)
        throw OutOfSieveRange("sieve limit exceeds 32-bit prime factors");
    spf_.assign(x_max + 1, 0);
    for (std::uint64_t i = 2; i <= x_max; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i] || i * p > x_max) break;
            spf_[i * p] = p;
        }
    }
}

std::uint32_t SieveTable::spf(std::uint64_t n) const {
    if (n < 2 || n > x_max()) throw OutOfSieveRange("spf: argument outside sieve range");
    return spf_[n];
}

std::vector<std::pair<std::uint64_t, int>> SieveTable::factor(std::uint64_t n) const {
    if (n == 0 || n > x_max()) throw OutOfSieveRange("factor: argument outside sieve range");
    std::vector<std::pair<std::uint64_t, int>> out;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

int SieveTable::mobius(std::uint64_t n) const {
    int sign = 1;
    for (const auto& [p, e] : factor(n)) {
        if (e > 1) return 0;
        sign = -sign;
        (void)p;
    }
    return sign;
}

}  // namespace divcor
