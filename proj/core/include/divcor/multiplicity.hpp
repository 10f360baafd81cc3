#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "divcor/rational.hpp"

namespace divcor {

struct SwapInstance {
    int k = 1;
    int ell = 1;
    std::vector<int> u_reps;  // ell distinct indices into A
    std::vector<int> v_reps;  // ell distinct indices into B
};

// w_l = l!^2 l^{2(k-l)} exactly.
Integer weight_w(int k, int ell);

// Counts pairs of ordered decompositions (A side, B side) of {1..k} into
// labeled nonempty blocks 1..ell with exactly one representative per block.
Integer swap_multiplicity_bruteforce(const SwapInstance& inst);

struct StarSystemReport {
    // Induced system (serialized) -> number of configurations producing it.
    std::map<std::string, Integer> counts;
    bool constant = false;          // all per-system counts equal
    bool matches_formula = false;   // and equal weight_w(k, ell)
    bool algebra_verified = false;  // tilde-system identities held throughout
    Integer multiplicity = 0;       // the common count when constant
    Integer total = 0;              // total configurations enumerated
};

// Enumerates ordered factorizations of m and n into k parts, all regroupings
// into ell labeled blocks (a lead bijection plus free placement of the
// remaining parts), and counts configurations per induced reduced system.
StarSystemReport star_system_multiplicity(std::uint64_t m, std::uint64_t n, int k, int ell);

}  // namespace divcor
