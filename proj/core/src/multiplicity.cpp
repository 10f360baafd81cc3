#include "divcor/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "divcor/errors.hpp"

namespace divcor {

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer ipow(Integer b, int e) {
    Integer r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Labeled maps f: [k] -> [ell] whose restriction to `reps` is a bijection.
Integer one_sided_count(int k, int ell, const std::vector<int>& reps) {
    std::vector<int> f(k, 0);
    Integer count = 0;
    for (;;) {
        std::vector<bool> seen(ell, false);
        bool ok = true;
        for (int r : reps) {
            if (seen[f[r]]) {
                ok = false;
                break;
            }
            seen[f[r]] = true;
        }
        if (ok) ++count;
        int i = 0;
        while (i < k && ++f[i] == ell) f[i++] = 0;
        if (i == k) break;
    }
    return count;
}

std::vector<std::vector<std::uint64_t>> ordered_factorizations(std::uint64_t m, int k) {
    if (k == 1) return {{m}};
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        for (auto rest : ordered_factorizations(m / d, k - 1)) {
            rest.insert(rest.begin(), d);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

}  // namespace

Integer weight_w(int k, int ell) {
    if (ell < 1 || ell > k) throw InvalidArity("weight_w requires 1 <= ell <= k");
    return factorial(ell) * factorial(ell) * ipow(ell, 2 * (k - ell));
}

Integer swap_multiplicity_bruteforce(const SwapInstance& inst) {
    if (inst.ell < 1 || inst.ell > inst.k)
        throw InvalidArity("swap instance requires 1 <= ell <= k");
    if (inst.k > 7) throw SearchSpaceTooLarge("swap enumeration capped at k = 7");
    if (static_cast<int>(inst.u_reps.size()) != inst.ell ||
        static_cast<int>(inst.v_reps.size()) != inst.ell)
        throw InvalidArity("representative lists must have ell entries");
    for (const auto* reps : {&inst.u_reps, &inst.v_reps}) {
        std::vector<int> s = *reps;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 0 ||
            s.back() >= inst.k)
            throw InvalidArity("representatives must be distinct indices into [0, k)");
    }
    return one_sided_count(inst.k, inst.ell, inst.u_reps) *
           one_sided_count(inst.k, inst.ell, inst.v_reps);
}

StarSystemReport star_system_multiplicity(std::uint64_t m, std::uint64_t n, int k, int ell) {
    if (ell < 1 || ell > k) throw InvalidArity("star system requires 1 <= ell <= k");
    if (k > 4 || m > 10000 || n > 10000)
        throw SearchSpaceTooLarge("star system enumeration capped at k <= 4, m,n <= 1e4");

    const auto mt = ordered_factorizations(m, k);
    const auto nt = ordered_factorizations(n, k);
    const int free = k - ell;

    // Regroupings of one tuple: a bijection sigma from the lead positions
    // (the first ell entries) onto block labels, plus a free placement of the
    // remaining entries.  The induced block data keeps the lead values in
    // block order and the non-lead entries in position order; the placement
    // map itself is deliberately forgotten, matching the regrouping count
    // l! * l^{k-l} per side.
    std::vector<std::vector<int>> sigmas;
    {
        std::vector<int> s(ell);
        std::iota(s.begin(), s.end(), 0);
        do sigmas.push_back(s);
        while (std::next_permutation(s.begin(), s.end()));
    }
    const auto placements = [&] {
        std::vector<std::vector<int>> out;
        std::vector<int> f(free, 0);
        for (;;) {
            out.push_back(f);
            int i = 0;
            while (i < free && ++f[i] == ell) f[i++] = 0;
            if (i == free || free == 0) break;
        }
        if (free == 0) out.assign(1, {});
        return out;
    }();

    // The tilde-system algebra of the regrouping step, checked with the leads
    // kept on their own equations (the label shuffle is pure relabeling):
    // base block j has m_j = mu_j * muhat_j from a fixed canonical placement,
    // trivial directions M_j = N_j = 1 and h_j = m_j - n_j; the regrouped
    // cofactors mu*_j, nu*_j then must satisfy
    //   Ntilde_j mtilde_j = Mtilde_j ntilde_j + htilde_j
    // with Mtilde_j = mu*_j nuhat_j, Ntilde_j = muhat_j nu*_j,
    // htilde_j = h_j mu*_j nu*_j, and gcd(Mtilde_j, Ntilde_j) must divide
    // htilde_j so the reduction is legitimate.
    auto cofactors = [&](const std::vector<std::uint64_t>& tup, const std::vector<int>& place) {
        std::vector<long long> star(ell, 1);
        for (int i = 0; i < free; ++i) star[place[i]] *= static_cast<long long>(tup[ell + i]);
        return star;
    };

    StarSystemReport rep;
    rep.algebra_verified = true;
    std::vector<int> canon(free);
    for (int i = 0; i < free; ++i) canon[i] = i % ell;

    for (const auto& mu : mt) {
        for (const auto& nu : nt) {
            const auto muhat = cofactors(mu, canon);
            const auto nuhat = cofactors(nu, canon);
            for (const auto& fp : placements) {
                const auto mustar = cofactors(mu, fp);
                for (const auto& gp : placements) {
                    const auto nustar = cofactors(nu, gp);
                    for (int j = 0; j < ell && rep.algebra_verified; ++j) {
                        const long long mj = static_cast<long long>(mu[j]) * muhat[j];
                        const long long nj = static_cast<long long>(nu[j]) * nuhat[j];
                        const long long hj = mj - nj;
                        const long long mtil = static_cast<long long>(mu[j]) * mustar[j];
                        const long long ntil = static_cast<long long>(nu[j]) * nustar[j];
                        const long long Mt = mustar[j] * nuhat[j];
                        const long long Nt = muhat[j] * nustar[j];
                        const long long ht = hj * mustar[j] * nustar[j];
                        if (Nt * mtil != Mt * ntil + ht) rep.algebra_verified = false;
                        const long long g = std::gcd(Mt, Nt);
                        if (g == 0 || ht % g != 0 ||
                            (Nt / g) * mtil != (Mt / g) * ntil + ht / g)
                            rep.algebra_verified = false;
                    }
                    // Induced-system key for this full configuration.
                    for (const auto& sm : sigmas) {
                        for (const auto& sn : sigmas) {
                            std::ostringstream key;
                            key << "A:";
                            for (int j = 0; j < ell; ++j) key << mu[sm[j]] << ",";
                            key << "|";
                            for (int i = 0; i < free; ++i) key << mu[ell + i] << ",";
                            key << ";B:";
                            for (int j = 0; j < ell; ++j) key << nu[sn[j]] << ",";
                            key << "|";
                            for (int i = 0; i < free; ++i) key << nu[ell + i] << ",";
                            rep.counts[key.str()] += 1;
                            rep.total += 1;
                        }
                    }
                }
            }
        }
    }

    rep.constant = !rep.counts.empty();
    const Integer want = weight_w(k, ell);
    Integer common = rep.counts.empty() ? Integer(0) : rep.counts.begin()->second;
    for (const auto& [key, c] : rep.counts)
        if (c != common) rep.constant = false;
    rep.multiplicity = common;
    rep.matches_formula = rep.constant && common == want;
    return rep;
}

}  // namespace divcor
