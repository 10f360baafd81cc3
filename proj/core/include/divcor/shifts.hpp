#pragma once

#include <divcor/errors.hpp>
#include <divcor/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace divcor {

// An ordered set of pairwise-distinct rational shifts.  Construction
// validates distinctness and the |shift| <= 1/2 bound required by the
// truncated-tail arguments downstream.
class ShiftSet {
public:
    ShiftSet() = default;
    explicit ShiftSet(std::vector<Rational> shifts, std::string label = "");

    std::size_t size() const { return shifts_.size(); }
    bool empty() const { return shifts_.empty(); }
    const Rational& operator[](std::size_t i) const { return shifts_[i]; }
    const std::vector<Rational>& values() const { return shifts_; }
    const std::string& label() const { return label_; }

    bool contains(const Rational& r) const;
    Rational max_abs() const;   // 0 for the empty set

    // A with alpha added to every element (throws DuplicateShift if the
    // result collides, which cannot happen for a uniform translation).
    ShiftSet adjusted(const Rational& alpha) const;
    // A with one extra element appended (throws on collision).
    ShiftSet with(const Rational& extra) const;
    // Elementwise negation.
    ShiftSet negated() const;
    // Union (throws DuplicateShift on overlap).
    ShiftSet unite(const ShiftSet& other) const;

    std::string to_string() const;

private:
    std::vector<Rational> shifts_;
    std::string label_;
};

// U subset of A-indices, V subset of B-indices, equal sizes, strictly
// increasing.
struct SwapSelection {
    std::vector<std::size_t> u_indices;
    std::vector<std::size_t> v_indices;
};

void validate_swap(const ShiftSet& A, const ShiftSet& B, const SwapSelection& sel);

// (A - U + V^-, B - V + U^-): remove the selected elements, append the
// negatives of the opposite selection.
std::pair<ShiftSet, ShiftSet> swap_transform(const ShiftSet& A, const ShiftSet& B,
                                             const SwapSelection& sel);

// All (U,V) with |U| = |V| <= max_swaps.
std::vector<SwapSelection> enumerate_swaps(std::size_t k, std::size_t max_swaps);

// Surjection {1..k} -> {1..l}, stored as 0-based block labels.
struct OrderedPartition {
    std::vector<int> block_of;  // size k, entries in [0, l)
    int blocks = 0;
};

std::vector<OrderedPartition> enumerate_ordered_partitions(int k, int l);

// Inclusion-exclusion surjection count, for property checks.
Integer surjection_count(int k, int l);

// lcm of the denominators across any number of shift sets.
Integer common_denominator(const std::vector<const ShiftSet*>& sets);

// All compositions of n into `parts` nonnegative ordered summands.
std::vector<std::vector<int>> compositions(int n, int parts);

} // namespace divcor
