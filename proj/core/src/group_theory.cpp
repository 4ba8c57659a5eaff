#include "abelext/group_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "abelext/numtheory.hpp"

namespace abelext {

GroupInvariants group_invariants(const FinAbGroup& g) {
    if (g.trivial()) throw std::domain_error("invariants undefined for the trivial group");
    GroupInvariants inv;
    inv.q = smallest_prime_factor(g.factor(0));
    std::int64_t m = 0;
    for (std::size_t j = 0; j < g.rank(); ++j)
        if (g.factor(j) % inv.q == 0) ++m;
    mpz_class qm;
    mpz_ui_pow_ui(qm.get_mpz_t(), static_cast<unsigned long>(inv.q),
                  static_cast<unsigned long>(m));
    inv.phi_q = qm - 1;
    inv.beta = m;
    inv.alpha = g.order() / inv.q * (inv.q - 1);
    inv.nu_over_q = inv.phi_q / (inv.q - 1);
    return inv;
}

std::vector<SylowPart> sylow_decomposition(const FinAbGroup& g) {
    std::vector<SylowPart> parts;
    if (g.trivial()) return parts;
    for (std::int64_t p : prime_factors(g.factor(0))) {
        SylowPart part;
        part.p = p;
        std::vector<std::int64_t> factors;
        for (std::size_t j = 0; j < g.rank(); ++j) {
            std::int64_t n = g.factor(j);
            std::int64_t pe = 1;
            while (n % p == 0) {
                n /= p;
                pe *= p;
            }
            if (pe > 1) {
                factors.push_back(pe);
                GroupElement e = g.zero();
                e.coords[j] = g.factor(j) / pe;  // order p^e in coordinate j
                part.embeddings.push_back(std::move(e));
            }
        }
        part.group = FinAbGroup(std::move(factors));
        parts.push_back(std::move(part));
    }
    return parts;
}

mpz_class mobius(const FinAbGroup& g) {
    mpz_class result = 1;
    for (const auto& part : sylow_decomposition(g)) {
        std::size_t n = part.group.rank();
        for (std::size_t j = 0; j < n; ++j)
            if (part.group.factor(j) != part.p) return 0;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part.p),
                      static_cast<unsigned long>(n * (n - 1) / 2));
        result *= (n % 2 == 1) ? -pw : pw;
    }
    return result;
}

mpz_class hom_count(const FinAbGroup& a, const FinAbGroup& b) {
    mpz_class count = 1;
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            count *= std::gcd(a.factor(i), b.factor(j));
    return count;
}

namespace {

// All subgroups of a p-group, as generator lists in that group's own
// coordinates. Worklist closure: join every known subgroup with every cyclic
// subgroup until saturation.
std::vector<Subgroup> p_group_subgroups(const FinAbGroup& p_group) {
    std::vector<Subgroup> subs{Subgroup::trivial(p_group)};
    std::map<IntMat, std::size_t> seen{{subs[0].basis(), 0}};
    std::uint64_t n = p_group.element_count();
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::uint64_t idx = 1; idx < n; ++idx) {
            GroupElement x = p_group.element_at(idx);
            if (subs[i].contains(x)) continue;
            auto gens = subs[i].generators();
            gens.push_back(std::move(x));
            Subgroup bigger(p_group, std::move(gens));
            if (seen.emplace(bigger.basis(), subs.size()).second)
                subs.push_back(std::move(bigger));
        }
    }
    return subs;
}

}  // namespace

std::vector<Subgroup> subgroups(const FinAbGroup& g, std::uint64_t bound) {
    if (g.order() > bound) throw std::domain_error("subgroup enumeration bound exceeded");
    std::vector<std::vector<GroupElement>> partial{{}};
    for (const auto& part : sylow_decomposition(g)) {
        std::vector<std::vector<GroupElement>> next;
        for (const auto& sub : p_group_subgroups(part.group)) {
            // lift generators from Sylow coordinates into G
            std::vector<GroupElement> lifted;
            for (const auto& sgen : sub.generators()) {
                GroupElement x = g.zero();
                for (std::size_t k = 0; k < part.group.rank(); ++k)
                    x = g.add(x, g.scale(sgen.coords[k], part.embeddings[k]));
                lifted.push_back(std::move(x));
            }
            for (const auto& prefix : partial) {
                auto gens = prefix;
                gens.insert(gens.end(), lifted.begin(), lifted.end());
                next.push_back(std::move(gens));
            }
        }
        partial = std::move(next);
    }
    std::vector<Subgroup> result;
    result.reserve(partial.size());
    for (auto& gens : partial) result.emplace_back(g, std::move(gens));
    std::sort(result.begin(), result.end());
    return result;
}

mpz_class count_surjections(const FinAbGroup& a, const FinAbGroup& g, std::uint64_t bound) {
    mpz_class total = 0;
    for (const auto& h : subgroups(g, bound))
        total += mobius(h.quotient()) * hom_count(a, h.structure());
    return total;
}

bool is_excluded_form(const FinAbGroup& g) {
    if (g.trivial()) throw std::domain_error("excluded-form test undefined for the trivial group");
    if (g.rank() <= 1) return true;
    return g.factor(1) == smallest_prime_factor(g.factor(0));
}

std::vector<Subgroup> bicyclic_family(const FinAbGroup& g) {
    if (g.rank() < 2) throw std::domain_error("no bicyclic decomposition for a cyclic group");
    std::vector<Subgroup> family;
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t j = i + 1; j < g.rank(); ++j) {
            GroupElement ei = g.zero(), ej = g.zero();
            ei.coords[i] = 1;
            ej.coords[j] = 1;
            family.emplace_back(g, std::vector<GroupElement>{ei, ej});
        }
    return family;
}

namespace {

// chains of p-power factors p^{e_1} >= p^{e_2} >= ... with product p^total
void partitions_into_chains(std::int64_t p, int total, int max_part,
                            std::vector<std::int64_t>& chain,
                            std::vector<std::vector<std::int64_t>>& out) {
    if (total == 0) {
        out.push_back(chain);
        return;
    }
    for (int e = std::min(total, max_part); e >= 1; --e) {
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        chain.push_back(pe);
        partitions_into_chains(p, total - e, e, chain, out);
        chain.pop_back();
    }
}

}  // namespace

std::vector<FinAbGroup> all_abelian_groups_up_to(std::int64_t max_order) {
    std::vector<FinAbGroup> groups{FinAbGroup()};
    for (std::int64_t n = 2; n <= max_order; ++n) {
        // combine one chain per prime power of n via CRT into invariant factors
        std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
        std::int64_t rest = n;
        while (rest > 1) {
            std::int64_t p = smallest_prime_factor(rest);
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            std::vector<std::vector<std::int64_t>> chains;
            std::vector<std::int64_t> chain;
            partitions_into_chains(p, e, e, chain, chains);
            per_prime.push_back(std::move(chains));
        }
        std::vector<std::vector<std::int64_t>> combos{{}};
        for (const auto& chains : per_prime) {
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& combo : combos)
                for (const auto& chain : chains) {
                    std::vector<std::int64_t> merged(std::max(combo.size(), chain.size()), 1);
                    for (std::size_t i = 0; i < combo.size(); ++i) merged[i] *= combo[i];
                    for (std::size_t i = 0; i < chain.size(); ++i) merged[i] *= chain[i];
                    next.push_back(std::move(merged));
                }
            combos = std::move(next);
        }
        for (auto& factors : combos) groups.emplace_back(std::move(factors));
    }
    std::sort(groups.begin(), groups.end(), [](const FinAbGroup& x, const FinAbGroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.factors() < y.factors();
    });
    return groups;
}

}  // namespace abelext
