#pragma once

#include <optional>
#include <string>

#include "divcor/instances.hpp"
#include "divcor/local_factors.hpp"

namespace divcor {

struct IdentityReport {
    std::string identity;
    std::string instance;
    bool pass = false;
    std::optional<Mismatch> mismatch;
    std::string detail;  // which sub-comparison failed, if any

    std::int64_t D = 1;
    std::int64_t ecut_x = 0;
    std::int64_t cutoff_x = 0;
    std::int64_t index_bound = 0;
    double seconds = 0.0;
};

// Truncation bookkeeping sized for every set the instance's identities touch.
LocalBounds instance_bounds(const LocalInstance& inst, std::int64_t scale = 1);

// Each check compares exact truncated series and passes only on coefficient
// equality through X-order inst.ecut_x.
IdentityReport check_lemma1(const LocalInstance& inst, int mn_max = 6);
IdentityReport check_lemma2(const LocalInstance& inst);
IdentityReport check_lemma3(const LocalInstance& inst);
IdentityReport check_theorem2(const LocalInstance& inst, SigmaMode mode = SigmaMode::Closed);
IdentityReport check_theorem4(const LocalInstance& inst, SigmaMode mode = SigmaMode::Closed);

// Recomputes the named check's primary series with every internal index bound
// doubled (same ring) and asserts that no retained coefficient changes.
// which: lemma1 | lemma2 | lemma3 | theorem2 | theorem4.
IdentityReport check_truncation_soundness(const std::string& which, const LocalInstance& inst);

}  // namespace divcor
