#include "abelext/analytic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "abelext/group_theory.hpp"
#include "abelext/numtheory.hpp"

namespace abelext {

namespace {

std::complex<double> unit_circle(const QmodZ& v) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(v.num) / static_cast<double>(v.den);
    return {std::cos(angle), std::sin(angle)};
}

// q^{-e s} as a complex power
std::complex<double> inv_power(std::int64_t q, double e, std::complex<double> s) {
    return std::exp(-s * e * std::log(static_cast<double>(q)));
}

// phi_p(unit part of u) for a rational unit-at-p argument
GroupElement evaluate_rational_unit(const FinAbGroup& g, const LocalComponent& c,
                                    const mpq_class& u, long valuation) {
    if (c.trivial()) return g.zero();
    std::int64_t pa = 1;
    for (int i = 0; i < c.level; ++i) pa = checked_mul(pa, c.p);
    mpz_class pz(static_cast<long>(pa)), pp(static_cast<long>(c.p));
    mpz_class num = u.get_num(), den = u.get_den();
    for (long i = 0; i < valuation; ++i) num /= c.p;
    for (long i = 0; i < -valuation; ++i) den /= c.p;
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::invalid_argument("denominator not a unit at p");
    mpz_class residue = (num * den_inv) % pz;
    if (residue < 0) residue += pz;
    return evaluate(g, c, residue.get_si());
}

}  // namespace

PairingElement make_pairing_element(std::vector<PairingTerm> terms) {
    for (const auto& t : terms)
        if (t.u == 0) throw std::invalid_argument("pairing element terms must be nonzero rationals");
    return PairingElement{std::move(terms)};
}

long rational_valuation(const mpq_class& u, std::int64_t p) {
    if (u == 0) throw std::invalid_argument("valuation of zero");
    long v = 0;
    mpz_class num = u.get_num(), den = u.get_den();
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

GroupElement valuation_part(const FinAbGroup& g, const PairingElement& x, std::int64_t p) {
    GroupElement acc = g.zero();
    for (const auto& t : x.terms)
        acc = g.add(acc, g.scale(rational_valuation(t.u, p), t.eta));
    return acc;
}

bool unit_class_at(const FinAbGroup& g, const PairingElement& x, std::int64_t p) {
    return valuation_part(g, x, p).is_zero();
}

bool qth_power_unit_class(const FinAbGroup& g, const PairingElement& x, std::int64_t p,
                          std::int64_t q) {
    if (g.order() % p == 0) throw std::invalid_argument("tame power test needs p coprime to |G|");
    if (!unit_class_at(g, x, p)) throw std::invalid_argument("power test needs a unit class");
    std::int64_t root = primitive_root_cached(p);
    GroupElement w = g.zero();
    for (const auto& t : x.terms) {
        long v = rational_valuation(t.u, p);
        mpz_class pz(static_cast<long>(p));
        mpz_class num = t.u.get_num(), den = t.u.get_den();
        for (long i = 0; i < v; ++i) num /= p;
        for (long i = 0; i < -v; ++i) den /= p;
        mpz_class den_inv;
        mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        mpz_class residue = (num * den_inv) % pz;
        if (residue < 0) residue += pz;
        std::int64_t e = discrete_log(static_cast<std::uint64_t>(root),
                                      static_cast<std::uint64_t>(residue.get_ui()),
                                      static_cast<std::uint64_t>(p - 1),
                                      static_cast<std::uint64_t>(p));
        if (e < 0) throw std::logic_error("unit discrete log failed");
        w = g.add(w, g.scale(e, t.eta));
    }
    // membership of w in q Dual(G) + (p-1) Dual(G), coordinatewise
    for (std::size_t j = 0; j < g.rank(); ++j) {
        std::int64_t d = std::gcd(std::gcd(q, p - 1), g.factor(j));
        if (w.coords[j] % d != 0) return false;
    }
    return true;
}

std::complex<double> pairing(const FinAbGroup& g, const LocalCharacterFull& chi,
                             const PairingElement& x) {
    std::int64_t p = chi.component.p;
    QmodZ total{0, 1};
    for (const auto& t : x.terms) {
        long v = rational_valuation(t.u, p);
        GroupElement img = g.scale(v, chi.frob_image);
        img = g.add(img, evaluate_rational_unit(g, chi.component, t.u, v));
        total = qmodz_add(total, g.character_value(t.eta, img));
    }
    return unit_circle(total);
}

LocalIndicator indicator_all() {
    return [](const FinAbGroup&, const LocalCharacterFull&) { return true; };
}

LocalIndicator indicator_inertia_divides_q() {
    return [](const FinAbGroup& g, const LocalCharacterFull& chi) {
        std::int64_t q = group_invariants(g).q;
        return mpz_class(q) % inertia_subgroup(g, chi.component).order() == 0;
    };
}

LocalIndicator indicator_frobenius_trivial() {
    return [](const FinAbGroup&, const LocalCharacterFull& chi) {
        return chi.frob_image.is_zero();
    };
}

std::complex<double> local_transform(const FinAbGroup& g, std::int64_t p,
                                     const PairingElement& x, std::complex<double> s,
                                     const LocalIndicator& f) {
    std::complex<double> total = 0;
    std::uint64_t n = g.element_count();
    for (const auto& comp : enumerate_local_components(g, p)) {
        int w = local_disc_exponent(g, comp);
        for (std::uint64_t i = 0; i < n; ++i) {
            LocalCharacterFull chi{comp, g.element_at(i)};
            if (!f(g, chi)) continue;
            total += pairing(g, chi, x) * inv_power(p, w, s);
        }
    }
    return total / static_cast<double>(n);
}

std::complex<double> lemma_3_3_closed_form(const FinAbGroup& g, std::int64_t p,
                                           const PairingElement& x, std::complex<double> s,
                                           const LocalIndicator& f) {
    if (g.order() % p == 0)
        throw std::invalid_argument("closed form needs p coprime to the group order");
    const std::uint64_t n = g.element_count();
    const std::int64_t d = std::gcd(g.exponent(), p - 1);
    const GroupElement vpart = valuation_part(g, x, p);
    const double group_order = static_cast<double>(n);

    std::complex<double> total = 0;
    for (std::int64_t m = 1; m <= d; ++m) {
        if (d % m != 0) continue;
        std::complex<double> char_sum = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            GroupElement gamma = g.element_at(i);
            if (g.element_order(gamma) != m) continue;  // kernel O^{*m}
            LocalComponent comp = make_odd_component(g, p, gamma);
            LocalCharacterFull unit_chi{comp, g.zero()};
            std::complex<double> inner = pairing(g, unit_chi, x);
            // tau average over the unramified twists
            std::complex<double> tau = 0;
            for (std::uint64_t k = 0; k < n; ++k) {
                GroupElement frob = g.element_at(k);
                LocalCharacterFull full{comp, frob};
                if (!f(g, full)) continue;
                tau += unit_circle(g.character_value(vpart, frob));
            }
            char_sum += inner * (tau / group_order);
        }
        double w = group_order * (1.0 - 1.0 / static_cast<double>(m));
        total += char_sum * inv_power(p, w, s);
    }
    return total;
}

mpq_class lemma_4_8_value(const FinAbGroup& g, std::int64_t p, const PairingElement& x) {
    if (g.order() % p == 0)
        throw std::invalid_argument("lemma 4.8 values need p coprime to the group order");
    if (!unit_class_at(g, x, p))
        throw std::invalid_argument("lemma 4.8 values are restricted to unit classes");
    GroupInvariants inv = group_invariants(g);
    if ((p - 1) % inv.q != 0) return 1;
    mpz_class qb = inv.phi_q + 1;  // Q^beta
    if (qth_power_unit_class(g, x, p, inv.q)) {
        mpq_class frac(mpz_class(qb - 1), mpz_class(static_cast<long>(p)));
        frac.canonicalize();
        return 1 + frac;
    }
    return 1 - mpq_class(1, static_cast<unsigned long>(p));
}

double leading_coefficient(const FinAbGroup& g, std::int64_t p, const PairingElement& x) {
    // With the minimal condition-(1.4) indicator the transform is exactly
    // a + c p^{-alpha s}; two real samples pin c.
    GroupInvariants inv = group_invariants(g);
    double alpha = inv.alpha.get_d();
    LocalIndicator f = indicator_inertia_divides_q();
    double s1 = 1.0, s2 = 2.0;
    double t1 = local_transform(g, p, x, s1, f).real();
    double t2 = local_transform(g, p, x, s2, f).real();
    double b1 = std::pow(static_cast<double>(p), -alpha * s1);
    double b2 = std::pow(static_cast<double>(p), -alpha * s2);
    return (t1 - t2) / (b1 - b2);
}

FitResult asymptotic_fit(const std::vector<std::pair<double, double>>& counts, double alpha,
                         double nu) {
    if (counts.size() < 3) throw std::invalid_argument("fit needs at least 3 data points");
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i].first <= counts[i - 1].first)
            throw std::invalid_argument("fit needs strictly increasing bounds");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [b, n] : counts) {
        double lx = std::log(b), ly = std::log(n);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double m = static_cast<double>(counts.size());
    FitResult fit;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    for (const auto& [b, n] : counts)
        fit.c_estimates.push_back(n / (std::pow(b, 1.0 / alpha) * std::pow(std::log(b), nu - 1.0)));
    return fit;
}

}  // namespace abelext
