#include "divcor/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "divcor/errors.hpp"

namespace divcor {

namespace {

Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Smallest-magnitude numerators first (randomized within a magnitude class):
// magnitudes drive the truncation bounds, hence the running time.
std::vector<Rational> pick_values(std::mt19937_64& rng, std::int64_t D, std::int64_t c_max,
                                  std::size_t need) {
    struct Cand {
        std::int64_t mag;
        std::uint64_t tie;
        std::int64_t c;
    };
    std::vector<Cand> cands;
    for (std::int64_t c = -c_max; c <= c_max; ++c)
        cands.push_back({std::llabs(c), rng(), c});
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        return std::tie(x.mag, x.tie) < std::tie(y.mag, y.tie);
    });
    if (need > cands.size())
        throw ConfigError("instance generator: not enough distinct shifts for this profile");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < need; ++i) out.emplace_back(Rational(cands[i].c, D));
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

}  // namespace

Rational LocalInstance::s_max() const {
    Rational m = 0;
    for (const auto& S : A)
        for (const auto& v : S.values()) m = std::max(m, abs_rat(v));
    for (const auto& S : B)
        for (const auto& v : S.values()) m = std::max(m, abs_rat(v));
    for (const auto& v : alpha) m = std::max(m, abs_rat(v));
    for (const auto& v : beta) m = std::max(m, abs_rat(v));
    return m;
}

std::string LocalInstance::describe() const {
    std::ostringstream os;
    os << name << ": l=" << ell() << " l'=" << ell_prime << " D=" << D << " ecut=" << ecut_x;
    for (std::size_t j = 0; j < A.size(); ++j)
        os << " [A" << j + 1 << "=" << A[j].to_string() << " B" << j + 1 << "="
           << B[j].to_string() << " a" << j + 1 << "=" << alpha[j] << " b" << j + 1 << "="
           << beta[j] << "]";
    return os.str();
}

InstanceProfile profile_by_name(const std::string& name) {
    if (name == "small") return InstanceProfile{2, 2, 6, 12};
    if (name == "medium") return InstanceProfile{3, 2, 12, 12};
    throw ConfigError("unknown profile: " + name);
}

std::vector<LocalInstance> seed_instances(std::uint64_t seed, std::size_t count,
                                          const InstanceProfile& profile, std::size_t ell_min,
                                          std::size_t ell_max, bool mixed) {
    if (ell_min < 1 || ell_min > ell_max) throw ConfigError("bad block-count range");
    std::mt19937_64 rng(seed);
    ell_max = std::min(ell_max, profile.max_blocks);
    if (mixed && ell_max < 2) throw ConfigError("mixed instances need at least two blocks");
    if (mixed) ell_min = std::max<std::size_t>(ell_min, 2);

    std::vector<LocalInstance> out;
    for (std::size_t idx = 0; idx < count; ++idx) {
        LocalInstance inst;
        // Multi-block identities need many pairwise-distinct union shifts; with
        // denominator <= 12 and magnitudes <= 1/4 only seven numerators exist,
        // so block set sizes shrink as the block count grows.  Redraw until the
        // drawn shape fits some permitted denominator.
        std::size_t ell = 0, need_a = 0, need_b = 0;
        std::vector<std::size_t> sa, sb;
        std::vector<std::int64_t> dens;
        {
            const std::size_t min_need = ell_min + (mixed ? 1 : ell_min);
            if (static_cast<std::size_t>(2 * (profile.max_denominator / 4) + 1) < min_need)
                throw ConfigError("instance generator: profile cannot host this block range");
        }
        while (dens.empty()) {
            std::uniform_int_distribution<std::size_t> ell_dist(ell_min, ell_max);
            ell = ell_dist(rng);
            const std::size_t cap = ell >= 3 ? 1 : profile.max_set_size;
            std::uniform_int_distribution<std::size_t> size_dist(1, cap);
            sa.assign(ell, 1);
            sb.assign(ell, 1);
            for (std::size_t j = 0; j < ell; ++j) {
                sa[j] = size_dist(rng);
                sb[j] = size_dist(rng);
            }
            if (ell == 3 && profile.max_set_size > 1 && idx % 2 == 0)
                sa[0] = 2;  // keep both set sizes in play at three blocks

            inst.ell_prime = ell;
            if (mixed) {
                std::uniform_int_distribution<std::size_t> lp(1, ell - 1);
                inst.ell_prime = lp(rng);
            }
            need_a = std::accumulate(sa.begin(), sa.end(), std::size_t{0}) + inst.ell_prime;
            need_b = std::accumulate(sb.begin(), sb.end(), std::size_t{0}) + inst.ell_prime;

            // Feasible denominators given the magnitude cap c <= floor(D/4).
            for (std::int64_t d : {4, 6, 12}) {
                if (d > profile.max_denominator) continue;
                const std::size_t have = static_cast<std::size_t>(2 * (d / 4) + 1);
                if (have >= need_a && have >= need_b) dens.push_back(d);
            }
        }
        // For each feasible denominator, the smallest numerator cap that still
        // offers enough distinct shifts; keep the denominators that minimize
        // the resulting magnitude c/D, since magnitudes set the truncation
        // depth and hence the running time.
        const std::size_t need = std::max(need_a, need_b);
        auto cap_for = [&](std::int64_t d) {
            std::int64_t c = 1;
            while (static_cast<std::size_t>(2 * c + 1) < need) ++c;
            return std::min(c, d / 4);
        };
        Rational best_mag = Rational(cap_for(dens[0]), dens[0]);
        for (std::int64_t d : dens) best_mag = std::min(best_mag, Rational(cap_for(d), d));
        std::vector<std::int64_t> keep;
        for (std::int64_t d : dens)
            if (Rational(cap_for(d), d) == best_mag) keep.push_back(d);
        const std::int64_t D = keep[std::uniform_int_distribution<std::size_t>(
            0, keep.size() - 1)(rng)];
        const std::int64_t c_max = cap_for(D);

        std::vector<Rational> va = pick_values(rng, D, c_max, need_a);
        std::vector<Rational> vb = pick_values(rng, D, c_max, need_b);
        std::size_t pa = 0, pb = 0;
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<Rational> a(va.begin() + pa, va.begin() + pa + sa[j]);
            pa += sa[j];
            std::vector<Rational> b(vb.begin() + pb, vb.begin() + pb + sb[j]);
            pb += sb[j];
            inst.A.emplace_back(a);
            inst.B.emplace_back(b);
        }
        // The identities attach -beta_j to the A side and -alpha_j to the B
        // side, so betas come from the A-side pool and vice versa.
        for (std::size_t j = 0; j < ell; ++j) {
            inst.beta.push_back(j < inst.ell_prime ? -va[pa++] : pick_values(rng, D, c_max, 1)[0]);
            inst.alpha.push_back(j < inst.ell_prime ? -vb[pb++] : pick_values(rng, D, c_max, 1)[0]);
        }
        inst.D = D;
        inst.ecut_x = profile.ecut_x;
        inst.name = "inst-" + std::to_string(seed) + "-" + std::to_string(idx);
        out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace divcor
