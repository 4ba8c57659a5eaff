#pragma once

#include <vector>

#include "abelext/fin_ab_group.hpp"

namespace abelext {

// Subgroup of a FinAbGroup, canonically represented by the Hermite normal
// form of the lattice in Z^l spanned by its generators together with the
// modulus vectors n_j e_j. Two Subgroup values of the same ambient group are
// equal iff they contain the same elements iff their bases coincide.
class Subgroup {
public:
    Subgroup(FinAbGroup ambient, std::vector<GroupElement> generators);

    static Subgroup trivial(const FinAbGroup& g);
    static Subgroup full(const FinAbGroup& g);

    const FinAbGroup& ambient() const { return ambient_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    const IntMat& basis() const { return basis_; }
    const mpz_class& order() const { return order_; }

    bool contains(const GroupElement& x) const;
    bool is_full() const { return order_ == ambient_.order(); }
    bool is_trivial() const { return order_ == 1; }

    // Invariant factors of the subgroup itself.
    FinAbGroup structure() const;
    bool is_cyclic() const { return structure().rank() <= 1; }

    // Invariant factors of the quotient G/H.
    FinAbGroup quotient() const;

    Subgroup join(const Subgroup& other) const;

    // All elements; requires the subgroup order to be within machine range.
    std::vector<GroupElement> elements() const;

    bool operator==(const Subgroup& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }
    bool operator<(const Subgroup& other) const;

private:
    FinAbGroup ambient_;
    std::vector<GroupElement> gens_;
    IntMat basis_;
    mpz_class order_;
};

}  // namespace abelext
