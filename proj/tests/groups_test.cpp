#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "abelext/group_theory.hpp"

using namespace abelext;

namespace {

// Independent oracle: close every subset of G and collect the distinct
// element sets. Exponential, only for tiny groups.
std::size_t subgroup_count_by_closure(const FinAbGroup& g) {
    std::uint64_t n = g.element_count();
    std::vector<GroupElement> elems;
    for (std::uint64_t i = 0; i < n; ++i) elems.push_back(g.element_at(i));
    std::set<std::set<GroupElement>> found;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::set<GroupElement> closure{g.zero()};
        std::vector<GroupElement> work{g.zero()};
        std::vector<GroupElement> gens;
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) gens.push_back(elems[i]);
        for (std::size_t i = 0; i < work.size(); ++i)
            for (const auto& x : gens) {
                GroupElement next = g.add(work[i], x);
                if (closure.insert(next).second) work.push_back(next);
            }
        found.insert(closure);
    }
    return found.size();
}

// Brute-force surjection count: all generator-image assignments.
mpz_class surjections_brute_force(const FinAbGroup& a, const FinAbGroup& g) {
    std::vector<std::vector<GroupElement>> choices(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::uint64_t idx = 0; idx < g.element_count(); ++idx) {
            GroupElement img = g.element_at(idx);
            if ((a.factor(i) % g.element_order(img)) == 0) choices[i].push_back(img);
        }
    mpz_class count = 0;
    std::vector<std::size_t> pick(a.rank(), 0);
    while (true) {
        std::vector<GroupElement> gens;
        for (std::size_t i = 0; i < a.rank(); ++i) gens.push_back(choices[i][pick[i]]);
        if (Subgroup(g, gens).is_full()) ++count;
        std::size_t i = 0;
        while (i < a.rank()) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == a.rank()) break;
    }
    return count;
}

}  // namespace

TEST_CASE("invariant factor validation") {
    CHECK_THROWS(FinAbGroup({2, 4}));
    CHECK_THROWS(FinAbGroup({4, 3}));
    CHECK_THROWS(FinAbGroup({1}));
    CHECK(FinAbGroup({4, 2}).order() == 8);
    CHECK(FinAbGroup().trivial());
    CHECK(FinAbGroup::parse("6,3").factors() == std::vector<std::int64_t>{6, 3});
    CHECK_THROWS(FinAbGroup::parse("2,4"));
    CHECK_THROWS(FinAbGroup::parse(""));
}

TEST_CASE("element order") {
    FinAbGroup v4({2, 2});
    CHECK(v4.element_order(v4.zero()) == 1);
    FinAbGroup g({4, 2});
    CHECK(g.element_order(g.reduce({1, 1})) == 4);
    CHECK(g.element_order(g.reduce({2, 1})) == 2);
}

TEST_CASE("group invariants") {
    auto inv = group_invariants(FinAbGroup({2, 2}));
    CHECK(inv.q == 2);
    CHECK(inv.phi_q == 3);
    CHECK(inv.alpha == 2);
    CHECK(inv.beta == 2);
    CHECK(inv.nu_over_q == 3);

    inv = group_invariants(FinAbGroup({3, 3}));
    CHECK(inv.q == 3);
    CHECK(inv.phi_q == 8);
    CHECK(inv.alpha == 6);
    CHECK(inv.beta == 2);
    CHECK(inv.nu_over_q == 4);

    // Z/6 + Z/3 has a single element of order 2, namely (3,0).
    inv = group_invariants(FinAbGroup({6, 3}));
    CHECK(inv.q == 2);
    CHECK(inv.phi_q == 1);
    CHECK(inv.alpha == 9);
    CHECK(inv.beta == 1);
    CHECK(inv.nu_over_q == 1);

    CHECK_THROWS(group_invariants(FinAbGroup()));
}

TEST_CASE("Q^beta = phi_Q + 1 on assorted groups") {
    for (const auto& g : all_abelian_groups_up_to(48)) {
        if (g.trivial()) continue;
        auto inv = group_invariants(g);
        mpz_class qb = 1;
        for (int i = 0; i < inv.beta; ++i) qb *= inv.q;
        CHECK(qb == inv.phi_q + 1);
        CHECK(inv.phi_q % (inv.q - 1) == 0);
    }
}

TEST_CASE("subgroup enumeration matches subset closure") {
    CHECK(subgroups(FinAbGroup({2, 2})).size() == 5);
    CHECK(subgroups(FinAbGroup({4})).size() == 3);
    CHECK(subgroups(FinAbGroup({4, 2})).size() == 8);
    for (const auto& g : {FinAbGroup({2, 2}), FinAbGroup({4, 2}), FinAbGroup({6}),
                          FinAbGroup({3, 3}), FinAbGroup({8}), FinAbGroup({12})})
        CHECK(subgroups(g).size() == subgroup_count_by_closure(g));
}

TEST_CASE("subgroup structure and membership") {
    FinAbGroup g({4, 2});
    Subgroup h(g, {g.reduce({2, 0}), g.reduce({0, 1})});
    CHECK(h.order() == 4);
    CHECK(h.structure() == FinAbGroup({2, 2}));
    CHECK(h.quotient() == FinAbGroup({2}));
    CHECK(h.contains(g.reduce({2, 1})));
    CHECK(!h.contains(g.reduce({1, 0})));
    CHECK(!h.is_cyclic());
    CHECK(Subgroup(g, {g.reduce({1, 1})}).is_cyclic());
    CHECK(h.elements().size() == 4);
}

TEST_CASE("mobius values") {
    CHECK(mobius(FinAbGroup({2, 2})) == 2);
    CHECK(mobius(FinAbGroup({4})) == 0);
    CHECK(mobius(FinAbGroup({6})) == 1);
    CHECK(mobius(FinAbGroup({2})) == -1);
    CHECK(mobius(FinAbGroup()) == 1);
    CHECK(mobius(FinAbGroup({2, 2, 2})) == -8);
    CHECK(mobius(FinAbGroup({6, 6})) == 6);  // mu((Z/2)^2) mu((Z/3)^2) = 2 * 3
}

TEST_CASE("mobius multiplicativity over coprime parts") {
    std::mt19937 rng(7);
    auto groups = all_abelian_groups_up_to(32);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& g1 = groups[rng() % groups.size()];
        const auto& g2 = groups[rng() % groups.size()];
        mpz_class o1 = g1.order(), o2 = g2.order();
        mpz_class common;
        mpz_gcd(common.get_mpz_t(), o1.get_mpz_t(), o2.get_mpz_t());
        if (common != 1) continue;
        // assemble the direct sum's invariant factors via lcm/gcd chain merge
        std::vector<std::int64_t> merged;
        std::size_t n = std::max(g1.rank(), g2.rank());
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t f1 = i < g1.rank() ? g1.factor(i) : 1;
            std::int64_t f2 = i < g2.rank() ? g2.factor(i) : 1;
            merged.push_back(f1 * f2);
        }
        CHECK(mobius(FinAbGroup(merged)) == mobius(g1) * mobius(g2));
    }
}

TEST_CASE("surjection counts match brute force on the spec examples") {
    CHECK(count_surjections(FinAbGroup({2, 2}), FinAbGroup({2, 2})) == 6);
    CHECK(count_surjections(FinAbGroup({4}), FinAbGroup({2})) == 1);
    CHECK(count_surjections(FinAbGroup({2}), FinAbGroup({2, 2})) == 0);
}

TEST_CASE("Delsarte inversion equals brute force on sampled pairs") {
    std::mt19937 rng(11);
    auto groups = all_abelian_groups_up_to(16);
    for (int trial = 0; trial < 30; ++trial) {
        const auto& a = groups[rng() % groups.size()];
        const auto& g = groups[rng() % groups.size()];
        if (a.trivial() || g.trivial()) continue;
        CHECK(count_surjections(a, g) == surjections_brute_force(a, g));
    }
}

TEST_CASE("excluded form detection") {
    CHECK(is_excluded_form(FinAbGroup({4, 2})));
    CHECK(!is_excluded_form(FinAbGroup({4, 4})));
    CHECK(!is_excluded_form(FinAbGroup({6, 3})));
    CHECK(is_excluded_form(FinAbGroup({12})));
    CHECK(is_excluded_form(FinAbGroup({2, 2, 2})));
    CHECK(is_excluded_form(FinAbGroup({6, 2})));
    CHECK_THROWS(is_excluded_form(FinAbGroup()));
}

TEST_CASE("bicyclic family") {
    FinAbGroup v4({2, 2});
    auto family = bicyclic_family(v4);
    REQUIRE(family.size() == 1);
    CHECK(family[0].is_full());

    auto family3 = bicyclic_family(FinAbGroup({4, 2, 2}));
    CHECK(family3.size() == 3);

    auto family63 = bicyclic_family(FinAbGroup({6, 3}));
    REQUIRE(family63.size() == 1);
    CHECK(family63[0].is_full());

    CHECK_THROWS(bicyclic_family(FinAbGroup({8})));
}

TEST_CASE("group presented by relations") {
    // Z^2 / <(2,0),(0,4)> = Z/4 + Z/2
    IntMat rel(2, 2);
    rel.at(0, 0) = 2;
    rel.at(1, 1) = 4;
    CHECK(FinAbGroup::from_relations(rel) == FinAbGroup({4, 2}));
    IntMat bad(1, 2);
    bad.at(0, 0) = 2;
    CHECK_THROWS(FinAbGroup::from_relations(bad));
}
