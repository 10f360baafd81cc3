#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divcor/shifts.hpp"

namespace divcor {

// One randomly generated local-identity test case.  A and B hold one shift
// set per block; alpha/beta are the per-block parameters.  All shifts are
// rationals over the common denominator scale D, and the union of each side's
// block sets together with the negated opposite parameters stays
// duplicate-free, so every derived set appearing in the identities is valid.
struct LocalInstance {
    std::vector<ShiftSet> A, B;
    std::vector<Rational> alpha, beta;
    std::size_t ell_prime = 0;  // number of zero-coordinate blocks (theorem-4 form)
    std::int64_t ecut_x = 12;   // comparison order in X units
    Integer D = 1;
    std::string name;

    std::size_t ell() const { return A.size(); }
    Rational s_max() const;
    std::string describe() const;
};

struct InstanceProfile {
    std::size_t max_blocks = 3;
    std::size_t max_set_size = 2;
    std::int64_t max_denominator = 12;
    std::int64_t ecut_x = 12;
};

InstanceProfile profile_by_name(const std::string& name);  // "small" | "medium"

// Deterministic: same (seed, count, profile) yields the same instances.
// ell_min/ell_max clamp the number of blocks; mixed=true also assigns
// ell_prime < ell for the kappa-augmented identity.
std::vector<LocalInstance> seed_instances(std::uint64_t seed, std::size_t count,
                                          const InstanceProfile& profile,
                                          std::size_t ell_min = 1, std::size_t ell_max = 3,
                                          bool mixed = false);

}  // namespace divcor
