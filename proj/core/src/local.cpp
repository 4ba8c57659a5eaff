#include "abelext/local.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "abelext/group_theory.hpp"
#include "abelext/numtheory.hpp"

namespace abelext {

namespace {

int log2_exact(std::int64_t v) {
    int j = 0;
    while (v > 1) {
        if (v % 2) throw std::invalid_argument("not a power of two");
        v /= 2;
        ++j;
    }
    return j;
}

// Elements x of G with x's order dividing d (as coordinate sweep over the
// subgroup G[d]).
std::vector<GroupElement> torsion_elements(const FinAbGroup& g, std::int64_t d) {
    std::vector<std::int64_t> counts(g.rank());
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        counts[j] = std::gcd(g.factor(j), d);
        total *= counts[j];
    }
    std::vector<GroupElement> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        GroupElement x = g.zero();
        std::uint64_t rest = idx;
        for (std::size_t j = g.rank(); j-- > 0;) {
            std::int64_t step = g.factor(j) / counts[j];
            x.coords[j] = static_cast<std::int64_t>(rest % counts[j]) * step;
            rest /= counts[j];
        }
        out.push_back(std::move(x));
    }
    return out;
}

// Elements of the p-Sylow subgroup of G.
std::vector<GroupElement> sylow_elements(const FinAbGroup& g, std::int64_t p) {
    std::int64_t d = 1;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        std::int64_t n = g.factor(j);
        while (n % p == 0) {
            n /= p;
            d = checked_mul(d, p);
        }
    }
    return torsion_elements(g, d);
}

}  // namespace

std::vector<std::int64_t> LocalComponent::key() const {
    std::vector<std::int64_t> k;
    if (p == 2) {
        k = eps.coords;
        k.insert(k.end(), w.coords.begin(), w.coords.end());
    } else {
        k = gamma.coords;
    }
    return k;
}

LocalComponent make_odd_component(const FinAbGroup& g, std::int64_t p, GroupElement gamma) {
    if (p <= 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("odd component needs an odd prime");
    if (gamma.coords.size() != g.rank()) throw std::invalid_argument("gamma rank mismatch");
    std::int64_t ord = g.element_order(gamma);
    std::int64_t wild = 1;
    while (ord % p == 0) {
        ord /= p;
        wild *= p;
    }
    if ((p - 1) % ord != 0)
        throw std::invalid_argument("component order incompatible with the unit group at p");
    LocalComponent c;
    c.p = p;
    c.gamma = std::move(gamma);
    c.eps = GroupElement{};
    c.w = GroupElement{};
    if (c.gamma.is_zero()) {
        c.level = 0;
    } else {
        int v = 0;  // v_p(order(gamma))
        while (wild > 1) {
            wild /= p;
            ++v;
        }
        c.level = 1 + v;
    }
    return c;
}

LocalComponent make_two_component(const FinAbGroup& g, GroupElement eps, GroupElement w) {
    if (eps.coords.size() != g.rank() || w.coords.size() != g.rank())
        throw std::invalid_argument("component rank mismatch");
    if (g.element_order(eps) > 2) throw std::invalid_argument("eps must satisfy 2 eps = 0");
    std::int64_t wo = g.element_order(w);
    int j = log2_exact(wo);  // throws unless a power of two
    LocalComponent c;
    c.p = 2;
    c.gamma = GroupElement{};
    c.eps = std::move(eps);
    c.w = std::move(w);
    if (wo >= 2)
        c.level = j + 2;
    else if (!c.eps.is_zero())
        c.level = 2;
    else
        c.level = 0;
    return c;
}

std::vector<LocalComponent> enumerate_local_components(const FinAbGroup& g, std::int64_t p) {
    std::vector<LocalComponent> out;
    if (p == 2) {
        for (const auto& eps : torsion_elements(g, 2))
            for (const auto& w : sylow_elements(g, 2))
                out.push_back(make_two_component(g, eps, w));
    } else {
        for (const auto& tame : torsion_elements(g, p - 1))
            for (const auto& wild : sylow_elements(g, p)) {
                LocalComponent c = make_odd_component(g, p, g.add(tame, wild));
                out.push_back(std::move(c));
            }
    }
    std::sort(out.begin(), out.end(),
              [](const LocalComponent& a, const LocalComponent& b) { return a.key() < b.key(); });
    return out;
}

Subgroup inertia_subgroup(const FinAbGroup& g, const LocalComponent& c) {
    std::vector<GroupElement> gens;
    if (c.p == 2) {
        gens = {c.eps, c.w};
    } else {
        gens = {c.gamma};
    }
    return Subgroup(g, std::move(gens));
}

int conductor_exponent(const FinAbGroup& g, const GroupElement& psi, const LocalComponent& c) {
    if (c.p == 2) {
        std::int64_t wo = g.character_value(psi, c.w).order();
        if (wo >= 2) return log2_exact(wo) + 2;
        return g.character_value(psi, c.eps).is_zero() ? 0 : 2;
    }
    std::int64_t o = g.character_value(psi, c.gamma).order();
    if (o == 1) return 0;
    int j = 0;
    while (o % c.p == 0) {
        o /= c.p;
        ++j;
    }
    return j == 0 ? 1 : j + 1;
}

int local_disc_exponent(const FinAbGroup& g, const LocalComponent& c) {
    if (c.trivial()) return 0;
    int w = 0;
    std::uint64_t n = g.element_count();
    for (std::uint64_t i = 0; i < n; ++i) w += conductor_exponent(g, g.element_at(i), c);
    return w;
}

mpz_class phi_g_local(const FinAbGroup& g, const LocalComponent& c, const GroupElement&) {
    // Conductors depend only on the restriction to the units, so the
    // Frobenius image never enters.
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(c.p),
                  static_cast<unsigned long>(local_disc_exponent(g, c)));
    return result;
}

std::int64_t primitive_root_cached(std::int64_t p) {
    static std::mutex mu;
    static std::map<std::int64_t, std::int64_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::int64_t g = primitive_root(p);
    cache.emplace(p, g);
    return g;
}

GroupElement evaluate(const FinAbGroup& g, const LocalComponent& c, std::int64_t u) {
    if (u % c.p == 0) throw std::invalid_argument("evaluate needs a unit at p");
    if (c.trivial()) return g.zero();

    if (c.p == 2) {
        std::int64_t mod = 1ll << c.level;
        std::int64_t uu = ((u % mod) + mod) % mod;
        std::int64_t e0 = (uu % 4 == 3) ? 1 : 0;
        GroupElement result = g.scale(e0, c.eps);
        if (c.level >= 3) {
            std::int64_t upos = e0 ? mod - uu : uu;
            std::uint64_t sub_ord = static_cast<std::uint64_t>(mod) / 4;  // order of <5>
            std::int64_t e1 = discrete_log(5 % mod, upos, sub_ord, mod);
            if (e1 < 0) throw std::logic_error("2-adic discrete log failed");
            result = g.add(result, g.scale(e1, c.w));
        }
        return result;
    }

    std::int64_t m = g.element_order(c.gamma);
    // Tame quadratic components reduce to a Legendre symbol.
    if (c.level == 1 && m == 2)
        return jacobi(u, c.p) == -1 ? c.gamma : g.zero();

    std::int64_t mod = c.p;
    for (int i = 1; i < c.level; ++i) mod = checked_mul(mod, c.p);
    std::int64_t uu = ((u % mod) + mod) % mod;
    std::int64_t phi = mod / c.p * (c.p - 1);
    std::int64_t root = primitive_root_cached(c.p);
    // project onto the order-m quotient and take the log there
    std::uint64_t t = pow_mod(uu, phi / m, mod);
    std::uint64_t b = pow_mod(root, phi / m, mod);
    std::int64_t e = discrete_log(b, t, m, mod);
    if (e < 0) throw std::logic_error("discrete log failed");
    return g.scale(e, c.gamma);
}

// ---- local conditions -------------------------------------------------

namespace {

std::map<std::string, LocalPredicate>& predicate_registry() {
    static std::map<std::string, LocalPredicate> registry{
        {"decomposition-cyclic",
         [](const Subgroup&, const Subgroup& d) { return d.is_cyclic(); }},
        {"decomposition-noncyclic",
         [](const Subgroup&, const Subgroup& d) { return !d.is_cyclic(); }},
        {"inertia-trivial",
         [](const Subgroup& i, const Subgroup&) { return i.is_trivial(); }},
    };
    return registry;
}

std::mutex registry_mutex;

}  // namespace

void register_local_predicate(const std::string& name, LocalPredicate fn) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    predicate_registry()[name] = std::move(fn);
}

const LocalPredicate& lookup_local_predicate(const std::string& name) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = predicate_registry().find(name);
    if (it == predicate_registry().end())
        throw std::invalid_argument("unknown local predicate: " + name);
    return it->second;
}

LocalConditionSet::LocalConditionSet(LocalRule default_rule) : default_(std::move(default_rule)) {
    switch (default_.kind) {
        case LocalRuleKind::Any:
        case LocalRuleKind::Unramified:
        case LocalRuleKind::InertiaDividesQ:
            break;
        default:
            throw std::invalid_argument("default rule must be Any, Unramified or InertiaDividesQ");
    }
}

void LocalConditionSet::set_rule(std::int64_t p, LocalRule rule) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("condition prime is not prime");
    if (!overrides_.emplace(p, std::move(rule)).second)
        throw std::invalid_argument("duplicate rule for prime " + std::to_string(p));
}

const LocalRule& LocalConditionSet::rule_at(std::int64_t p) const {
    auto it = overrides_.find(p);
    return it == overrides_.end() ? default_ : it->second;
}

bool LocalConditionSet::unconstrained() const {
    if (default_.kind != LocalRuleKind::Any) return false;
    for (const auto& [p, rule] : overrides_)
        if (rule.kind != LocalRuleKind::Any) return false;
    return true;
}

bool matches_condition(const LocalRule& rule, const FinAbGroup& g, const Subgroup& inertia,
                       const Subgroup& decomposition, const LocalComponent& c) {
    switch (rule.kind) {
        case LocalRuleKind::Any:
            return true;
        case LocalRuleKind::Unramified:
            return inertia.is_trivial();
        case LocalRuleKind::InertiaDividesQ: {
            std::int64_t q = group_invariants(g).q;
            return mpz_class(q) % inertia.order() == 0;
        }
        case LocalRuleKind::AllowedComponents:
            return std::find(rule.allowed.begin(), rule.allowed.end(), c) != rule.allowed.end();
        case LocalRuleKind::FullLocalPredicate:
            return lookup_local_predicate(rule.predicate)(inertia, decomposition);
    }
    return false;
}

bool rule_admits_component(const LocalRule& rule, const FinAbGroup& g, const LocalComponent& c) {
    switch (rule.kind) {
        case LocalRuleKind::Any:
        case LocalRuleKind::FullLocalPredicate:
            return true;
        case LocalRuleKind::Unramified:
            return c.trivial();
        case LocalRuleKind::InertiaDividesQ: {
            std::int64_t q = group_invariants(g).q;
            return mpz_class(q) % inertia_subgroup(g, c).order() == 0;
        }
        case LocalRuleKind::AllowedComponents:
            return std::find(rule.allowed.begin(), rule.allowed.end(), c) != rule.allowed.end();
    }
    return false;
}

bool rule_needs_leaf_check(const LocalRule& rule) {
    return rule.kind == LocalRuleKind::FullLocalPredicate;
}

}  // namespace abelext
