#pragma once

#include <cstdint>
#include <vector>

#include "abelext/subgroup.hpp"

namespace abelext {

// Hard cap for exhaustive subgroup/element enumeration.
inline constexpr std::uint64_t kGroupEnumerationBound = 1'000'000;

struct GroupInvariants {
    std::int64_t q = 0;        // smallest prime dividing |G|
    mpz_class phi_q;           // number of elements of order exactly q
    mpz_class alpha;           // |G| (1 - 1/q)
    std::int64_t beta = 0;     // log_q(phi_q + 1)
    mpz_class nu_over_q;       // phi_q / (q - 1), the Q-specialization
};

GroupInvariants group_invariants(const FinAbGroup& g);

// Mobius function on finite abelian groups: multiplicative over coprime
// factors, (-1)^n p^{n(n-1)/2} on (Z/p)^n, zero when any Sylow subgroup is
// non-elementary.
mpz_class mobius(const FinAbGroup& g);

// Number of homomorphisms A -> B via the closed gcd formula on invariant
// factors.
mpz_class hom_count(const FinAbGroup& a, const FinAbGroup& b);

// Complete duplicate-free list of subgroups, enumerated Sylow-by-Sylow.
// Throws if |G| exceeds `bound`. Deterministically ordered.
std::vector<Subgroup> subgroups(const FinAbGroup& g,
                                std::uint64_t bound = kGroupEnumerationBound);

// Number of surjective homomorphisms A -> G by Delsarte inversion:
// sum over H <= G of mobius(G/H) |Hom(A,H)|.
mpz_class count_surjections(const FinAbGroup& a, const FinAbGroup& g,
                            std::uint64_t bound = kGroupEnumerationBound);

// True iff G is of the shape Z/n + (Z/Q)^r with Q the smallest prime
// dividing |G|; on invariant factors this is l <= 1 or n_2 = Q.
bool is_excluded_form(const FinAbGroup& g);

// The coordinate-pair subgroups <e_i, e_j> for i < j. The wedge images of
// these decompose the exterior square. Throws for cyclic groups.
std::vector<Subgroup> bicyclic_family(const FinAbGroup& g);

// All abelian groups of order at most `max_order` (invariant-factor chains),
// ordered by (order, chain).
std::vector<FinAbGroup> all_abelian_groups_up_to(std::int64_t max_order);

// Sylow decomposition helper: for prime p, the p-Sylow subgroup's invariant
// factors together with coordinate embeddings into G (the element of G
// corresponding to each Sylow generator).
struct SylowPart {
    std::int64_t p;
    FinAbGroup group;
    std::vector<GroupElement> embeddings;
};
std::vector<SylowPart> sylow_decomposition(const FinAbGroup& g);

}  // namespace abelext
