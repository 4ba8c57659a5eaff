#include <doctest.h>

#include <random>

#include "abelext/extension.hpp"
#include "abelext/group_theory.hpp"
#include "abelext/numtheory.hpp"

using namespace abelext;

namespace {

// Components of the quadratic character of Q(sqrt d), read off the
// classical fundamental-discriminant decomposition.
std::vector<LocalComponent> quadratic_components(const FinAbGroup& z2, std::int64_t d) {
    std::int64_t disc = fundamental_discriminant(d);
    std::int64_t odd = disc;
    while (odd % 2 == 0) odd /= 2;
    std::int64_t odd_disc = (((odd % 4) + 4) % 4 == 1) ? odd : -odd;  // careful below
    // decide the 2-part D_2 = disc / D_odd with D_odd the fundamental
    // discriminant of the odd part
    std::int64_t d_odd = (((odd % 4) + 4) % 4 == 1) ? odd : 0;
    if (d_odd == 0) d_odd = odd;  // odd = 3 mod 4: its own fundamental disc is 4*odd
    (void)odd_disc;
    std::vector<LocalComponent> comps;
    for (std::int64_t p : prime_factors(disc)) {
        if (p == 2) continue;
        comps.push_back(make_odd_component(z2, p, z2.reduce({1})));
    }
    std::int64_t two_part = disc;
    for (std::int64_t p : prime_factors(disc))
        if (p != 2)
            while (two_part % p == 0) two_part /= p;
    // sign bookkeeping: disc = two_part_signed * odd_fundamental
    std::int64_t odd_fund = disc / two_part;
    if ((((odd_fund % 4) + 4) % 4) != 1) {
        odd_fund = -odd_fund;
        two_part = -two_part;
    }
    GroupElement eps = z2.zero(), w = z2.zero();
    switch (two_part) {
        case 1:
            break;
        case -4:
            eps = z2.reduce({1});
            break;
        case 8:
            w = z2.reduce({1});
            break;
        case -8:
            eps = z2.reduce({1});
            w = z2.reduce({1});
            break;
        default:
            REQUIRE(false);
    }
    if (!eps.is_zero() || !w.is_zero()) comps.push_back(make_two_component(z2, eps, w));
    return comps;
}

}  // namespace

TEST_CASE("component counts follow |G[p-1]| |Syl_p|") {
    CHECK(enumerate_local_components(FinAbGroup({2, 2}), 5).size() == 4);
    CHECK(enumerate_local_components(FinAbGroup({3}), 5).size() == 1);
    CHECK(enumerate_local_components(FinAbGroup({3}), 7).size() == 3);
    CHECK(enumerate_local_components(FinAbGroup({2, 2}), 2).size() == 16);
    CHECK(enumerate_local_components(FinAbGroup({4}), 2).size() == 8);
    CHECK(enumerate_local_components(FinAbGroup({6, 3}), 3).size() == 18);  // |G[2]| |Syl_3| = 2*9
    CHECK(enumerate_local_components(FinAbGroup({6, 3}), 7).size() == 18);  // G[6] = G
}

TEST_CASE("levels are minimal") {
    FinAbGroup z4({4});
    for (const auto& c : enumerate_local_components(z4, 2)) {
        if (c.trivial()) CHECK(c.level == 0);
        if (!c.w.is_zero()) CHECK(c.level == (z4.element_order(c.w) == 4 ? 4 : 3));
        if (c.w.is_zero() && !c.eps.is_zero()) CHECK(c.level == 2);
    }
    FinAbGroup z9({9});
    for (const auto& c : enumerate_local_components(z9, 3)) {
        std::int64_t ord = z9.element_order(c.gamma);
        if (ord == 1) CHECK(c.level == 0);
        if (ord == 3) CHECK(c.level == 2);
        if (ord == 9) CHECK(c.level == 3);
    }
}

TEST_CASE("conductor exponents on the spec instances") {
    FinAbGroup z2({2});
    auto tame = make_odd_component(z2, 5, z2.reduce({1}));
    CHECK(conductor_exponent(z2, z2.reduce({1}), tame) == 1);
    CHECK(conductor_exponent(z2, z2.zero(), tame) == 0);

    auto gaussian = make_two_component(z2, z2.reduce({1}), z2.zero());
    CHECK(conductor_exponent(z2, z2.reduce({1}), gaussian) == 2);

    FinAbGroup z4({4});
    auto c16 = make_two_component(z4, z4.zero(), z4.reduce({1}));
    CHECK(conductor_exponent(z4, z4.reduce({1}), c16) == 4);
    CHECK(conductor_exponent(z4, z4.reduce({2}), c16) == 3);
    CHECK(conductor_exponent(z4, z4.zero(), c16) == 0);
    CHECK(local_disc_exponent(z4, c16) == 11);  // conductors 1, 8, 16, 16
}

TEST_CASE("local discriminant exponents") {
    FinAbGroup z3({3});
    CHECK(local_disc_exponent(z3, make_odd_component(z3, 7, z3.reduce({1}))) == 2);

    FinAbGroup z2({2});
    CHECK(local_disc_exponent(z2, make_two_component(z2, z2.zero(), z2.reduce({1}))) == 3);

    FinAbGroup v4({2, 2});
    CHECK(local_disc_exponent(v4, make_odd_component(v4, 5, v4.reduce({1, 0}))) == 2);
}

TEST_CASE("quadratic components reconstruct every fundamental discriminant") {
    FinAbGroup z2({2});
    for (std::int64_t d = -1000; d <= 1000; ++d) {
        if (d == 0 || d == 1 || squarefree_kernel(d) != d) continue;
        std::int64_t disc = fundamental_discriminant(d);
        auto ext = make_extension(z2, quadratic_components(z2, d));
        CHECK(ext.surjective);
        CHECK(ext.discriminant == std::llabs(disc));
    }
}

TEST_CASE("phi_G_local ignores the Frobenius image") {
    FinAbGroup v4({2, 2});
    auto comps = enumerate_local_components(v4, 13);
    for (const auto& c : comps) {
        mpz_class base = phi_g_local(v4, c, v4.zero());
        for (std::uint64_t i = 0; i < v4.element_count(); ++i)
            CHECK(phi_g_local(v4, c, v4.element_at(i)) == base);
    }
    auto trivial = make_odd_component(v4, 13, v4.zero());
    CHECK(phi_g_local(v4, trivial, v4.zero()) == 1);

    FinAbGroup z2({2});
    CHECK(phi_g_local(z2, make_odd_component(z2, 5, z2.reduce({1})), z2.zero()) == 5);
    CHECK(phi_g_local(v4, make_odd_component(v4, 13, v4.reduce({0, 1})), v4.zero()) == 169);
}

TEST_CASE("minimal nontrivial exponent is alpha at split primes") {
    for (const auto& g : {FinAbGroup({2, 2}), FinAbGroup({3, 3}), FinAbGroup({4, 2}),
                          FinAbGroup({6, 3}), FinAbGroup({15})}) {
        auto inv = group_invariants(g);
        for (std::int64_t p : primes_up_to(100)) {
            if (g.order() % p == 0) continue;
            int min_w = 0;
            for (const auto& c : enumerate_local_components(g, p)) {
                if (c.trivial()) continue;
                int w = local_disc_exponent(g, c);
                min_w = min_w == 0 ? w : std::min(min_w, w);
            }
            if (min_w == 0) continue;  // no nontrivial component at p
            CHECK(min_w >= inv.alpha);
            if ((p - 1) % inv.q == 0) CHECK(min_w == inv.alpha);
        }
    }
}

TEST_CASE("evaluate on the spec instances") {
    FinAbGroup z4({4});
    auto c = make_odd_component(z4, 13, z4.reduce({1}));
    CHECK(evaluate(z4, c, 1) == z4.zero());
    CHECK(evaluate(z4, c, 5) == z4.reduce({1}));  // 2^9 = 5 mod 13, 9 = 1 mod 4

    FinAbGroup z2({2});
    auto gaussian = make_two_component(z2, z2.reduce({1}), z2.zero());
    CHECK(evaluate(z2, gaussian, 3) == z2.reduce({1}));
    CHECK(evaluate(z2, gaussian, -1) == z2.reduce({1}));
    CHECK(evaluate(z2, gaussian, 5) == z2.zero());
    CHECK_THROWS(evaluate(z2, gaussian, 4));
}

TEST_CASE("evaluate is a homomorphism on random units") {
    std::mt19937 rng(17);
    FinAbGroup g({12, 2});
    for (std::int64_t p : {3ll, 5ll, 13ll, 2ll}) {
        for (const auto& c : enumerate_local_components(g, p)) {
            for (int trial = 0; trial < 20; ++trial) {
                std::int64_t u1 = static_cast<std::int64_t>(rng() % 1000) + 2;
                std::int64_t u2 = static_cast<std::int64_t>(rng() % 1000) + 2;
                if (u1 % p == 0 || u2 % p == 0) continue;
                CHECK(evaluate(g, c, u1 * u2) ==
                      g.add(evaluate(g, c, u1), evaluate(g, c, u2)));
            }
        }
    }
}

TEST_CASE("condition rules") {
    FinAbGroup v4({2, 2});
    auto tame = make_odd_component(v4, 5, v4.reduce({1, 0}));
    auto trivial = make_odd_component(v4, 5, v4.zero());
    Subgroup inertia = inertia_subgroup(v4, tame);
    Subgroup dec = Subgroup::full(v4);

    CHECK(matches_condition(LocalRule{}, v4, inertia, dec, tame));
    LocalRule unram{.kind = LocalRuleKind::Unramified};
    CHECK(!matches_condition(unram, v4, inertia, dec, tame));
    CHECK(matches_condition(unram, v4, inertia_subgroup(v4, trivial), dec, trivial));
    LocalRule small{.kind = LocalRuleKind::InertiaDividesQ};
    CHECK(matches_condition(small, v4, inertia, dec, tame));
    LocalRule allowed{.kind = LocalRuleKind::AllowedComponents, .allowed = {trivial}};
    CHECK(matches_condition(allowed, v4, inertia_subgroup(v4, trivial), dec, trivial));
    CHECK(!matches_condition(allowed, v4, inertia, dec, tame));
    LocalRule pred{.kind = LocalRuleKind::FullLocalPredicate, .predicate = "decomposition-cyclic"};
    CHECK(!matches_condition(pred, v4, inertia, dec, tame));
    CHECK(matches_condition(pred, v4, inertia, Subgroup(v4, {v4.reduce({1, 0})}), tame));

    // inertia of order 4 does not divide Q = 2
    FinAbGroup g44({4, 4});
    auto big = make_odd_component(g44, 5, g44.reduce({1, 0}));
    CHECK(!rule_admits_component(LocalRule{.kind = LocalRuleKind::InertiaDividesQ}, g44, big));

    CHECK_THROWS(LocalConditionSet(LocalRule{.kind = LocalRuleKind::FullLocalPredicate}));
    LocalConditionSet set;
    set.set_rule(3, unram);
    CHECK_THROWS(set.set_rule(3, unram));
    CHECK(set.rule_at(3).kind == LocalRuleKind::Unramified);
    CHECK(set.rule_at(5).kind == LocalRuleKind::Any);
}

TEST_CASE("component validation") {
    FinAbGroup z3({3});
    CHECK_THROWS(make_odd_component(z3, 5, z3.reduce({1})));  // order 3 does not divide 4
    CHECK_NOTHROW(make_odd_component(z3, 7, z3.reduce({1})));
    FinAbGroup z4({4});
    CHECK_THROWS(make_two_component(z4, z4.reduce({1}), z4.zero()));  // 2 eps != 0
    FinAbGroup z6({6});
    CHECK_THROWS(make_two_component(z6, z6.zero(), z6.reduce({1})));  // order 6 not a 2-power
}
