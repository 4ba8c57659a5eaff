#include "abelext/hnp.hpp"

#include <numeric>
#include <stdexcept>

#include "abelext/group_theory.hpp"
#include "abelext/numtheory.hpp"

namespace abelext {

HnpReport hasse_norm_test(const GExtensionQ& ext) {
    if (!ext.surjective) throw std::invalid_argument("hasse_norm_test needs a surjective extension");
    ExtSquare e2(ext.group);
    DecompositionData data = decomposition_data(ext);

    std::vector<ExtElement> span_gens;
    bool all_cyclic = data.at_infinity.is_cyclic();
    auto absorb = [&](const Subgroup& d) {
        ExtSubgroup img = subgroup_wedge_image(e2, d);
        span_gens.insert(span_gens.end(), img.generators().begin(), img.generators().end());
        if (!d.is_cyclic()) all_cyclic = false;
    };
    absorb(data.at_infinity);
    for (const auto& place : data.ramified) absorb(place.decomposition);

    ExtSubgroup v(e2, std::move(span_gens));
    HnpReport report;
    report.span_order = v.order();
    report.sha_order = index_in_ambient(v);
    report.a_order = report.span_order;
    report.hnp_holds = report.sha_order == 1;
    report.wa_holds = all_cyclic;
    report.sha_dual_structure = v.quotient();
    return report;
}

bool biquadratic_legendre_test(std::int64_t a, std::int64_t b) {
    auto check = [](std::int64_t v, const char* name) {
        if (v == 1) throw std::invalid_argument(std::string(name) + " must differ from 1");
        if (squarefree_kernel(v) != v)
            throw std::invalid_argument(std::string(name) + " must be squarefree");
        if (((v % 4) + 4) % 4 != 1)
            throw std::invalid_argument(std::string(name) + " must be 1 mod 4");
    };
    check(a, "a");
    check(b, "b");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");

    for (std::int64_t p : prime_factors(b))
        if (jacobi(a, p) != 1) return false;
    for (std::int64_t p : prime_factors(a))
        if (jacobi(b, p) != 1) return false;
    return true;
}

bool lemma_6_13_predicate(const GExtensionQ& ext) {
    if (!ext.surjective) throw std::invalid_argument("predicate needs a surjective extension");
    if (is_excluded_form(ext.group))
        throw std::domain_error("predicate only applies outside the excluded family");
    std::int64_t q = group_invariants(ext.group).q;
    for (const auto& place : decomposition_data(ext).ramified) {
        bool small_inertia = mpz_class(q) % place.inertia.order() == 0;
        if (!small_inertia && !place.decomposition.is_cyclic()) return false;
    }
    return true;
}

std::vector<Subgroup> unrealized_bicyclic_certificate(const GExtensionQ& ext) {
    if (!ext.surjective) throw std::invalid_argument("certificate needs a surjective extension");
    if (!is_excluded_form(ext.group))
        throw std::domain_error("certificate only applies to the excluded family");
    if (hasse_norm_test(ext).hnp_holds) return {};

    DecompositionData data = decomposition_data(ext);
    std::vector<Subgroup> unrealized;
    for (const auto& member : bicyclic_family(ext.group)) {
        bool realized = false;
        for (const auto& place : data.ramified)
            if (place.decomposition == member) {
                realized = true;
                break;
            }
        if (data.at_infinity == member) realized = true;
        if (!realized) unrealized.push_back(member);
    }
    if (unrealized.empty())
        throw std::logic_error("HNP failure without an unrealized bicyclic member");
    return unrealized;
}

}  // namespace abelext
