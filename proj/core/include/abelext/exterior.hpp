#pragma once

#include <span>
#include <utility>
#include <vector>

#include "abelext/subgroup.hpp"

namespace abelext {

struct ExtElement {
    std::vector<std::int64_t> coords;  // c_{ij} mod m_{ij}, basis order of the ExtSquare

    bool is_zero() const {
        for (auto c : coords)
            if (c != 0) return false;
        return true;
    }
    auto operator<=>(const ExtElement&) const = default;
};

// The exterior square of a finite abelian group in its normal form: one
// coordinate per pair i < j with modulus n_j (the smaller invariant factor).
// It vanishes exactly for cyclic groups, and |^2 G| = prod_{i<j} n_j.
class ExtSquare {
public:
    explicit ExtSquare(FinAbGroup ambient);

    const FinAbGroup& ambient() const { return ambient_; }
    std::size_t dim() const { return moduli_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& basis_pairs() const {
        return pairs_;
    }
    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    const mpz_class& order() const { return order_; }
    std::int64_t exponent() const;

    ExtElement zero() const { return ExtElement{std::vector<std::int64_t>(dim(), 0)}; }
    ExtElement reduce(std::vector<std::int64_t> coords) const;
    ExtElement add(const ExtElement& x, const ExtElement& y) const;

    // wedge(x, y) has coordinates (x_i y_j - x_j y_i) mod n_j.
    ExtElement wedge(const GroupElement& x, const GroupElement& y) const;

    std::string debug_string(const ExtElement& x) const;

    bool operator==(const ExtSquare&) const = default;

private:
    FinAbGroup ambient_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::int64_t> moduli_;
    mpz_class order_;
};

// Subgroup of an exterior square, canonical via the HNF of the lifted
// mixed-modulus lattice.
class ExtSubgroup {
public:
    ExtSubgroup(ExtSquare ambient, std::vector<ExtElement> generators);

    static ExtSubgroup trivial(const ExtSquare& e);

    const ExtSquare& ambient() const { return ambient_; }
    const std::vector<ExtElement>& generators() const { return gens_; }
    const mpz_class& order() const { return order_; }
    bool contains(const ExtElement& x) const;

    // Invariant factors of the quotient ^2 G / V (the dual of Sha when V is
    // the decomposition span).
    FinAbGroup quotient() const;

    bool operator==(const ExtSubgroup& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    ExtSquare ambient_;
    std::vector<ExtElement> gens_;
    IntMat basis_;
    mpz_class order_;
};

// Span of the wedges of all generator pairs of D inside ^2 G; this is the
// image of ^2 D -> ^2 G, and vanishes iff D is cyclic.
ExtSubgroup subgroup_wedge_image(const ExtSquare& ext, const Subgroup& d);

// Subgroup generated by the union of the generators of all parts.
ExtSubgroup span_sum(const ExtSquare& ext, std::span<const ExtSubgroup> parts);

// |^2 G| / |V| as an exact integer; by duality this is the order of the
// kernel of H^3(G,Z) -> prod H^3(D_v,Z).
mpz_class index_in_ambient(const ExtSubgroup& v);

}  // namespace abelext
