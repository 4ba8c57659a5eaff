#pragma once

#include <vector>

#include "abelext/local.hpp"

namespace abelext {

// One G-extension of Q: a finite set of nontrivial local components whose
// images jointly generate G (surjectivity is derived, never trusted).
// The discriminant is prod_p p^{w_p} by the conductor-discriminant formula.
struct GExtensionQ {
    FinAbGroup group;
    std::vector<LocalComponent> components;  // nontrivial, ascending p
    mpz_class discriminant;
    bool surjective = false;

    const LocalComponent* component_at(std::int64_t p) const;
};

// Validates the component list, sorts it, and derives discriminant and
// surjectivity. Throws on duplicate primes or trivial components.
GExtensionQ make_extension(FinAbGroup g, std::vector<LocalComponent> components);

// Deterministic stream order: ascending discriminant, then the
// lexicographic component encoding.
bool extension_stream_less(const GExtensionQ& a, const GExtensionQ& b);

// Idelic Frobenius specialized to Q: sum over the other ramified components
// evaluated at p. For unramified p this generates the decomposition group.
GroupElement frobenius_at(const GExtensionQ& ext, std::int64_t p);

struct PlaceData {
    std::int64_t p;
    Subgroup inertia;
    GroupElement frobenius;
    Subgroup decomposition;
};

struct DecompositionData {
    std::vector<PlaceData> ramified;  // ascending p
    Subgroup at_infinity;             // order at most 2
};

// Requires a surjective extension.
DecompositionData decomposition_data(const GExtensionQ& ext);

// Decomposition group at one place (works at unramified p too).
Subgroup decomposition_at(const GExtensionQ& ext, std::int64_t p);

}  // namespace abelext
