#include "abelext/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "abelext/group_theory.hpp"
#include "abelext/numtheory.hpp"

namespace abelext {

using u128 = unsigned __int128;

namespace {

u128 ipow128(u128 base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// base^exp <= limit without overflowing; sets out on success.
bool checked_ipow(std::int64_t base, int exp, u128 limit, u128& out) {
    int lb = 64 - __builtin_clzll(static_cast<unsigned long long>(base));
    if (static_cast<long>(lb) * exp <= 126) {
        u128 r = ipow128(static_cast<u128>(base), exp);
        if (r > limit) return false;
        out = r;
        return true;
    }
    u128 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / static_cast<u128>(base)) return false;
        r *= static_cast<u128>(base);
    }
    if (r > limit) return false;
    out = r;
    return true;
}

bool mpz_to_u128(const mpz_class& v, u128& out) {
    if (v < 0) return false;
    mpz_class rest = v;
    out = 0;
    int shift = 0;
    while (rest > 0) {
        if (shift >= 128) return false;
        out |= static_cast<u128>(mpz_class(rest & 0xffffffff).get_ui()) << shift;
        rest >>= 32;
        shift += 32;
    }
    return true;
}

mpz_class u128_to_mpz(u128 v) {
    mpz_class out = 0;
    int shift = 0;
    while (v > 0) {
        out += mpz_class(static_cast<unsigned long>(v & 0xffffffff)) << shift;
        v >>= 32;
        shift += 32;
    }
    return out;
}

}  // namespace

SubgroupLattice::SubgroupLattice(const FinAbGroup& g) {
    subs_ = subgroups(g, 4096);
    std::map<IntMat, int> index;
    for (std::size_t i = 0; i < subs_.size(); ++i) {
        index.emplace(subs_[i].basis(), static_cast<int>(i));
        if (subs_[i].is_trivial()) trivial_ = static_cast<int>(i);
        if (subs_[i].is_full()) full_ = static_cast<int>(i);
    }
    join_.assign(subs_.size(), std::vector<int>(subs_.size(), 0));
    for (std::size_t a = 0; a < subs_.size(); ++a)
        for (std::size_t b = a; b < subs_.size(); ++b) {
            int id = index.at(subs_[a].join(subs_[b]).basis());
            join_[a][b] = id;
            join_[b][a] = id;
        }
}

int SubgroupLattice::id_of(const Subgroup& s) const {
    for (std::size_t i = 0; i < subs_.size(); ++i)
        if (subs_[i] == s) return static_cast<int>(i);
    throw std::logic_error("subgroup not in lattice");
}

namespace {

struct CompEntry {
    LocalComponent comp;  // p = 0 in shared tame shapes; filled on emission
    int w = 0;
    int image_id = 0;
    u128 pw = 0;  // nonzero only in explicit per-prime lists
};

struct ShapeClass {
    std::vector<CompEntry> comps;
    int min_w = 0;
};

using Stack = std::vector<std::pair<std::int64_t, const CompEntry*>>;

}  // namespace

struct Enumerator::Impl {
    FinAbGroup group;
    u128 bound = 0;
    LocalConditionSet conditions;
    int threads = 1;

    SubgroupLattice lattice;
    int alpha = 0;

    std::vector<std::int64_t> primes;                    // candidates, ascending
    std::map<std::int64_t, ShapeClass> shapes;           // by gcd(exp G, p-1)
    std::map<std::int64_t, ShapeClass> explicit_lists;   // 2, p | |G|, rule primes
    std::vector<int> reach;                              // join of images below index i
    std::vector<std::int64_t> forced_primes;
    std::vector<std::int64_t> leaf_rule_primes;

    explicit Impl(FinAbGroup g) : group(std::move(g)), lattice(group) {}

    const ShapeClass& comps_at(std::int64_t p) const {
        auto it = explicit_lists.find(p);
        if (it != explicit_lists.end()) return it->second;
        return shapes.at(std::gcd(group.exponent(), p - 1));
    }

    bool needs_leaf_checks() const {
        return !forced_primes.empty() || !leaf_rule_primes.empty();
    }

    GExtensionQ make_ext(u128 disc, const Stack& stack) const {
        GExtensionQ ext;
        ext.group = group;
        ext.surjective = true;
        ext.discriminant = u128_to_mpz(disc);
        ext.components.reserve(stack.size());
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {  // ascending p
            LocalComponent c = it->second->comp;
            c.p = it->first;
            ext.components.push_back(std::move(c));
        }
        return ext;
    }

    bool passes_leaf_rules(const GExtensionQ& ext) const {
        for (std::int64_t p : forced_primes)
            if (!ext.component_at(p)) return false;
        for (std::int64_t p : leaf_rule_primes) {
            const LocalRule& rule = conditions.rule_at(p);
            LocalComponent trivial_comp;
            const LocalComponent* c = ext.component_at(p);
            if (!c) {
                trivial_comp.p = p;
                if (p == 2) {
                    trivial_comp.eps = group.zero();
                    trivial_comp.w = group.zero();
                } else {
                    trivial_comp.gamma = group.zero();
                }
                c = &trivial_comp;
            }
            Subgroup inertia = inertia_subgroup(group, *c);
            Subgroup dec = decomposition_at(ext, p);
            if (!matches_condition(rule, group, inertia, dec, *c)) return false;
        }
        return true;
    }

    // Largest index j < hi whose prime satisfies p^alpha <= budget, or -1.
    int affordable_top(int hi, u128 budget) const {
        u128 tmp;
        auto ok = [&](int j) {
            return checked_ipow(primes[static_cast<std::size_t>(j)], alpha, budget, tmp);
        };
        if (hi <= 0) return -1;
        if (ok(hi - 1)) return hi - 1;
        int lo = 0, hiq = hi - 1;  // invariant: ok fails at hiq
        if (!ok(0)) return -1;
        while (hiq - lo > 1) {
            int mid = (lo + hiq) / 2;
            if (ok(mid))
                lo = mid;
            else
                hiq = mid;
        }
        return lo;
    }

    template <typename RawVisit>
    void emit(u128 disc, const Stack& stack, RawVisit& visit) const {
        if (needs_leaf_checks()) {
            GExtensionQ ext = make_ext(disc, stack);
            if (!passes_leaf_rules(ext)) return;
        }
        visit(disc, stack);
    }

    template <typename RawVisit>
    void dfs(int max_index, u128 budget, u128 disc, int image_id, Stack& stack,
             RawVisit& visit) const {
        if (image_id == lattice.full_id()) emit(disc, stack, visit);
        int top = affordable_top(max_index, budget);
        for (int j = top; j >= 0; --j) {
            std::int64_t p = primes[static_cast<std::size_t>(j)];
            const ShapeClass& cls = comps_at(p);
            for (const auto& e : cls.comps) {
                u128 pw = e.pw;
                if (pw != 0) {
                    if (pw > budget) continue;
                } else if (!checked_ipow(p, e.w, budget, pw)) {
                    continue;
                }
                int child = lattice.join(image_id, e.image_id);
                if (lattice.join(child, reach[static_cast<std::size_t>(j)]) != lattice.full_id())
                    continue;
                stack.emplace_back(p, &e);
                dfs(j, budget / pw, disc * pw, child, stack, visit);
                stack.pop_back();
            }
        }
    }

    // Top-level split: the component choice at the largest ramified prime.
    template <typename RawVisit>
    void run(RawVisit&& visit) const {
        struct Task {
            int index;
            const CompEntry* entry;
            u128 pw;
        };
        std::vector<Task> tasks;
        for (int i = static_cast<int>(primes.size()); i-- > 0;) {
            for (const auto& e : comps_at(primes[static_cast<std::size_t>(i)]).comps) {
                u128 pw = e.pw;
                if (pw != 0) {
                    if (pw > bound) continue;
                } else if (!checked_ipow(primes[static_cast<std::size_t>(i)], e.w, bound, pw)) {
                    continue;
                }
                tasks.push_back(Task{i, &e, pw});
            }
        }

        auto run_task = [&](const Task& t) {
            Stack stack;
            stack.emplace_back(primes[static_cast<std::size_t>(t.index)], t.entry);
            int image = t.entry->image_id;
            if (lattice.join(image, reach[static_cast<std::size_t>(t.index)]) ==
                lattice.full_id())
                dfs(t.index, bound / t.pw, t.pw, image, stack, visit);
        };

        if (threads == 1 || tasks.size() <= 1) {
            for (const auto& t : tasks) run_task(t);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int n = std::min<int>(threads, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= tasks.size()) return;
                    run_task(tasks[k]);
                }
            });
        for (auto& th : pool) th.join();
    }
};

Enumerator::Enumerator(FinAbGroup g, const mpz_class& bound, LocalConditionSet conditions,
                       EnumerateOptions opts)
    : impl_(std::make_unique<Impl>(std::move(g))) {
    if (impl_->group.trivial()) throw std::invalid_argument("enumeration needs a nontrivial group");
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    if (!mpz_to_u128(bound, impl_->bound))
        throw std::invalid_argument("bound exceeds the supported 128-bit range");
    impl_->conditions = std::move(conditions);
    impl_->threads = opts.threads > 0 ? opts.threads
                                      : static_cast<int>(std::thread::hardware_concurrency());
    if (impl_->threads < 1) impl_->threads = 1;

    const FinAbGroup& G = impl_->group;
    impl_->alpha = static_cast<int>(group_invariants(G).alpha.get_si());

    // Nontrivial components at p coprime to |G| are tame, so their exponent
    // is at least alpha; p^alpha <= B bounds every candidate prime there.
    mpz_class root;
    mpz_root(root.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(impl_->alpha));
    if (root > 200'000'000) throw std::invalid_argument("bound too large for enumeration");
    std::int64_t prime_cap = root.get_si();

    auto admissible = [&](std::int64_t p, const LocalComponent& c) {
        return rule_admits_component(impl_->conditions.rule_at(p), G, c);
    };

    auto build_explicit = [&](std::int64_t p) {
        ShapeClass cls;
        for (auto& comp : enumerate_local_components(G, p)) {
            if (comp.trivial()) continue;
            if (!admissible(p, comp)) continue;
            CompEntry e;
            e.w = local_disc_exponent(G, comp);
            if (!checked_ipow(p, e.w, impl_->bound, e.pw)) continue;
            e.image_id = impl_->lattice.id_of(inertia_subgroup(G, comp));
            e.comp = std::move(comp);
            cls.comps.push_back(std::move(e));
        }
        for (const auto& e : cls.comps)
            cls.min_w = cls.min_w == 0 ? e.w : std::min(cls.min_w, e.w);
        return cls;
    };

    // Shared tame shapes for primes coprime to |G|, one class per divisor of
    // exp(G) (the class of p is gcd(exp G, p-1)).
    const LocalRule& default_rule = impl_->conditions.default_rule();
    std::int64_t q_small = group_invariants(G).q;
    for (std::int64_t d = 1; d <= G.exponent(); ++d) {
        if (G.exponent() % d != 0) continue;
        ShapeClass cls;
        if (default_rule.kind != LocalRuleKind::Unramified) {
            for (std::uint64_t idx = 1; idx < G.element_count(); ++idx) {
                GroupElement gamma = G.element_at(idx);
                std::int64_t m = G.element_order(gamma);
                if (d % m != 0) continue;
                if (default_rule.kind == LocalRuleKind::InertiaDividesQ && q_small % m != 0)
                    continue;
                CompEntry e;
                e.w = static_cast<int>(G.order().get_si() / m * (m - 1));
                e.image_id = impl_->lattice.id_of(Subgroup(G, {gamma}));
                e.comp = LocalComponent{
                    .p = 0, .gamma = std::move(gamma), .eps = {}, .w = {}, .level = 1};
                cls.comps.push_back(std::move(e));
            }
        }
        std::sort(cls.comps.begin(), cls.comps.end(), [](const CompEntry& a, const CompEntry& b) {
            return a.comp.key() < b.comp.key();
        });
        for (const auto& e : cls.comps)
            cls.min_w = cls.min_w == 0 ? e.w : std::min(cls.min_w, e.w);
        impl_->shapes.emplace(d, std::move(cls));
    }

    // Primes that need their own component lists: 2, divisors of |G|, and
    // any prime carrying a rule override.
    std::vector<std::int64_t> special{2};
    for (std::int64_t p : prime_factors(G.order().get_si())) special.push_back(p);
    for (const auto& [p, rule] : impl_->conditions.overrides()) {
        special.push_back(p);
        LocalComponent trivial_comp;
        trivial_comp.p = p;
        if (p == 2) {
            trivial_comp.eps = G.zero();
            trivial_comp.w = G.zero();
        } else {
            trivial_comp.gamma = G.zero();
        }
        if (!rule_admits_component(rule, G, trivial_comp)) impl_->forced_primes.push_back(p);
        if (rule_needs_leaf_check(rule)) impl_->leaf_rule_primes.push_back(p);
    }
    std::sort(special.begin(), special.end());
    special.erase(std::unique(special.begin(), special.end()), special.end());
    for (std::int64_t p : special) impl_->explicit_lists.emplace(p, build_explicit(p));

    for (std::int64_t p : primes_up_to(prime_cap)) {
        auto it = impl_->explicit_lists.find(p);
        if (it != impl_->explicit_lists.end()) {
            if (!it->second.comps.empty()) impl_->primes.push_back(p);
            continue;
        }
        const ShapeClass& cls = impl_->shapes.at(std::gcd(G.exponent(), p - 1));
        if (cls.comps.empty()) continue;
        u128 tmp;
        if (!checked_ipow(p, cls.min_w, impl_->bound, tmp)) continue;
        impl_->primes.push_back(p);
    }
    for (std::int64_t p : special) {
        if (p <= prime_cap) continue;
        if (!impl_->explicit_lists.at(p).comps.empty()) impl_->primes.push_back(p);
    }
    std::sort(impl_->primes.begin(), impl_->primes.end());

    impl_->reach.assign(impl_->primes.size() + 1, impl_->lattice.trivial_id());
    for (std::size_t i = 0; i < impl_->primes.size(); ++i) {
        int acc = impl_->reach[i];
        for (const auto& e : impl_->comps_at(impl_->primes[i]).comps)
            acc = impl_->lattice.join(acc, e.image_id);
        impl_->reach[i + 1] = acc;
    }
}

Enumerator::~Enumerator() = default;

void Enumerator::visit_unordered(const std::function<void(const GExtensionQ&)>& visit) const {
    impl_->run([&](u128 disc, const Stack& stack) { visit(impl_->make_ext(disc, stack)); });
}

void Enumerator::for_each(const std::function<void(const GExtensionQ&)>& visit) const {
    auto all = collect();
    for (const auto& ext : all) visit(ext);
}

mpz_class Enumerator::count() const {
    std::atomic<std::uint64_t> n{0};
    impl_->run([&](u128, const Stack&) { n.fetch_add(1, std::memory_order_relaxed); });
    return mpz_class(static_cast<unsigned long>(n.load()));
}

std::vector<GExtensionQ> Enumerator::collect() const {
    std::vector<GExtensionQ> out;
    std::mutex mu;
    impl_->run([&](u128 disc, const Stack& stack) {
        GExtensionQ ext = impl_->make_ext(disc, stack);
        std::lock_guard<std::mutex> lock(mu);
        out.push_back(std::move(ext));
    });
    std::sort(out.begin(), out.end(), extension_stream_less);
    return out;
}

mpz_class modulus_bound(const FinAbGroup& g, const mpz_class& bound) {
    // kappa = min over reachable nontrivial components of w / level; the
    // conductor of any extension with discriminant <= B is then <= B^{1/kappa}.
    GroupInvariants inv = group_invariants(g);
    std::int64_t num = inv.alpha.get_si(), den = 1;  // generic tame ratio
    auto consider = [&](std::int64_t w, std::int64_t level) {
        if (w * den < num * level) {
            num = w;
            den = level;
        }
    };
    std::vector<std::int64_t> special{2};
    for (std::int64_t p : prime_factors(g.order().get_si())) special.push_back(p);
    std::sort(special.begin(), special.end());
    special.erase(std::unique(special.begin(), special.end()), special.end());
    for (std::int64_t p : special)
        for (const auto& c : enumerate_local_components(g, p))
            if (!c.trivial()) consider(local_disc_exponent(g, c), c.level);
    mpz_class rhs;
    mpz_pow_ui(rhs.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(den));
    mpz_class m;
    mpz_root(m.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(num));
    return m;
}

}  // namespace abelext
