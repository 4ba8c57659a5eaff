#pragma once

#include <complex>
#include <functional>

#include "abelext/local.hpp"

namespace abelext {

// x = sum_i u_i (x) eta_i in Q^* tensor the dual group, localized on demand.
struct PairingTerm {
    mpq_class u;
    GroupElement eta;  // character coordinates in the dual group
};

struct PairingElement {
    std::vector<PairingTerm> terms;
};

PairingElement make_pairing_element(std::vector<PairingTerm> terms);

// A full local character of Q_p^*: the unit part plus the Frobenius image of
// the uniformizer.
struct LocalCharacterFull {
    LocalComponent component;
    GroupElement frob_image;
};

// p-adic valuation of a nonzero rational.
long rational_valuation(const mpq_class& u, std::int64_t p);

// The valuation-weighted character sum sum_i v_p(u_i) eta_i; x is a unit
// class at p exactly when this vanishes.
GroupElement valuation_part(const FinAbGroup& g, const PairingElement& x, std::int64_t p);
bool unit_class_at(const FinAbGroup& g, const PairingElement& x, std::int64_t p);

// Membership of the unit class in the image of the Q-th powers (tame test,
// requires p coprime to |G|).
bool qth_power_unit_class(const FinAbGroup& g, const PairingElement& x, std::int64_t p,
                          std::int64_t q);

// <chi, x> = prod_i e(eta_i(chi(u_i))) with chi(u) = v(u) frob + unit part.
std::complex<double> pairing(const FinAbGroup& g, const LocalCharacterFull& chi,
                             const PairingElement& x);

using LocalIndicator = std::function<bool(const FinAbGroup&, const LocalCharacterFull&)>;

LocalIndicator indicator_all();
LocalIndicator indicator_inertia_divides_q();   // the minimal condition-(1.4) set
LocalIndicator indicator_frobenius_trivial();   // not invariant under unramified twists

// (1/|G|) sum over Hom(Q_p^*, G) of f(chi) <chi, x> / Phi_G(chi)^s.
std::complex<double> local_transform(const FinAbGroup& g, std::int64_t p,
                                     const PairingElement& x, std::complex<double> s,
                                     const LocalIndicator& f);

// The kernel-sorted closed form: sum over m | (exp G, p-1) of the character
// sums times p^{-|G|(1-1/m)s}. Requires p coprime to |G|.
std::complex<double> lemma_3_3_closed_form(const FinAbGroup& g, std::int64_t p,
                                           const PairingElement& x, std::complex<double> s,
                                           const LocalIndicator& f);

// Exact rational value of the order-restricted transform at s = 1/alpha:
// 1 + (Q^beta - 1)/p, 1 - 1/p, or 1 depending on p mod Q and the Q-th power
// class of x. Requires p coprime to |G| and x a unit class at p.
mpq_class lemma_4_8_value(const FinAbGroup& g, std::int64_t p, const PairingElement& x);

// Coefficient of p^{-alpha s} extracted from the transform with the minimal
// condition-(1.4) indicator, solved from evaluations at two real s values.
double leading_coefficient(const FinAbGroup& g, std::int64_t p, const PairingElement& x);

struct FitResult {
    double slope = 0;
    std::vector<double> c_estimates;
};

// Least-squares slope of log N against log B plus the normalized constants
// N / (B^{1/alpha} (log B)^{nu - 1}); diagnostic only.
FitResult asymptotic_fit(const std::vector<std::pair<double, double>>& counts, double alpha,
                         double nu);

}  // namespace abelext
