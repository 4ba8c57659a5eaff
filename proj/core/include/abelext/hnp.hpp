#pragma once

#include <vector>

#include "abelext/extension.hpp"
#include "abelext/exterior.hpp"

namespace abelext {

// Arithmetic verdicts for one extension. With V the span of the wedge
// images of all decomposition groups inside ^2 G:
//   sha_order  = |^2 G| / |V|   (Tate's criterion, dualized)
//   a_order    = |V|            (the weak approximation defect order)
//   hnp_holds  = sha_order == 1
//   wa_holds   = every decomposition group is cyclic
struct HnpReport {
    bool hnp_holds = false;
    mpz_class sha_order;
    mpz_class a_order;
    bool wa_holds = false;
    mpz_class span_order;
    FinAbGroup sha_dual_structure;  // invariant factors of ^2 G / V
};

HnpReport hasse_norm_test(const GExtensionQ& ext);

// The elementary biquadratic criterion: Q(sqrt a, sqrt b) fails the HNP iff
// (a|p) = 1 for all p | b and (b|p) = 1 for all p | a. Requires a, b
// coprime, squarefree, different from 1 and congruent to 1 mod 4.
bool biquadratic_legendre_test(std::int64_t a, std::int64_t b);

// Sufficient local condition for HNP failure outside the excluded family:
// at every ramified prime, either the inertia group has order dividing Q or
// the decomposition group is cyclic.
bool lemma_6_13_predicate(const GExtensionQ& ext);

// For groups of the excluded form: if the extension fails the HNP, the
// bicyclic family members never realized as a decomposition group (at least
// one exists); empty when the HNP holds.
std::vector<Subgroup> unrealized_bicyclic_certificate(const GExtensionQ& ext);

}  // namespace abelext
