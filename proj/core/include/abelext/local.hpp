#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "abelext/subgroup.hpp"

namespace abelext {

// A continuous character of the local unit group Z_p^* with values in G.
// For odd p the unit group is topologically generated by a fixed primitive
// root g (primitive mod p and p^2), so the character is the image gamma of
// g. For p = 2 the generators are -1 and 5, with images eps (2 eps = 0) and
// w (of 2-power order). `level` is the exponent of the conductor.
struct LocalComponent {
    std::int64_t p = 0;
    GroupElement gamma;  // odd p only
    GroupElement eps;    // p = 2 only
    GroupElement w;      // p = 2 only
    int level = 0;

    bool trivial() const { return level == 0; }
    std::vector<std::int64_t> key() const;  // encoding used for ordering
    auto operator<=>(const LocalComponent&) const = default;
};

LocalComponent make_odd_component(const FinAbGroup& g, std::int64_t p, GroupElement gamma);
LocalComponent make_two_component(const FinAbGroup& g, GroupElement eps, GroupElement w);

// Complete list of local components at p, including the trivial one;
// |G[p-1]| * |Syl_p(G)| entries for odd p, |G[2]| * |Syl_2(G)| for p = 2.
std::vector<LocalComponent> enumerate_local_components(const FinAbGroup& g, std::int64_t p);

// Subgroup of G generated by the component's images (the inertia group).
Subgroup inertia_subgroup(const FinAbGroup& g, const LocalComponent& c);

// Exponent of the conductor of psi composed with the component, read off the
// higher-unit-group filtration.
int conductor_exponent(const FinAbGroup& g, const GroupElement& psi, const LocalComponent& c);

// Exponent of p in the discriminant contributed by this component:
// sum of conductor exponents over all characters of G.
int local_disc_exponent(const FinAbGroup& g, const LocalComponent& c);

// Local conductor product over the dual group, p^{local_disc_exponent}.
// The value does not depend on the choice of Frobenius image extending the
// component (conductors only see the unit part); tests exercise this.
mpz_class phi_g_local(const FinAbGroup& g, const LocalComponent& c, const GroupElement& frob_image);

// phi_p(u) for u coprime to p, via discrete logarithm against the fixed
// generators.
GroupElement evaluate(const FinAbGroup& g, const LocalComponent& c, std::int64_t u);

std::int64_t primitive_root_cached(std::int64_t p);

// ---- local conditions -------------------------------------------------

enum class LocalRuleKind {
    Any,
    Unramified,
    InertiaDividesQ,
    AllowedComponents,
    FullLocalPredicate,
};

struct LocalRule {
    LocalRuleKind kind = LocalRuleKind::Any;
    std::vector<LocalComponent> allowed;  // AllowedComponents
    std::string predicate;                // FullLocalPredicate, registry name
};

using LocalPredicate =
    std::function<bool(const Subgroup& inertia, const Subgroup& decomposition)>;

void register_local_predicate(const std::string& name, LocalPredicate fn);
const LocalPredicate& lookup_local_predicate(const std::string& name);

// One rule per prime on top of a default applying everywhere else. The
// default must be one of Any / Unramified / InertiaDividesQ.
class LocalConditionSet {
public:
    LocalConditionSet() = default;
    explicit LocalConditionSet(LocalRule default_rule);

    void set_rule(std::int64_t p, LocalRule rule);
    const LocalRule& rule_at(std::int64_t p) const;
    const std::map<std::int64_t, LocalRule>& overrides() const { return overrides_; }
    const LocalRule& default_rule() const { return default_; }
    bool unconstrained() const;

private:
    LocalRule default_;
    std::map<std::int64_t, LocalRule> overrides_;
};

// The full rule semantics, evaluated on complete local data.
bool matches_condition(const LocalRule& rule, const FinAbGroup& g, const Subgroup& inertia,
                       const Subgroup& decomposition, const LocalComponent& c);

// The part of a rule decidable from the unit part alone; used to prune the
// search. FullLocalPredicate rules defer to the leaf.
bool rule_admits_component(const LocalRule& rule, const FinAbGroup& g, const LocalComponent& c);
bool rule_needs_leaf_check(const LocalRule& rule);

}  // namespace abelext
