#pragma once

#include <functional>
#include <memory>

#include "abelext/extension.hpp"

namespace abelext {

// Joint-image lattice of a small group: subgroups indexed by dense ids with
// a precomputed join table, so the search tracks surjectivity in O(1).
class SubgroupLattice {
public:
    explicit SubgroupLattice(const FinAbGroup& g);

    int trivial_id() const { return trivial_; }
    int full_id() const { return full_; }
    int size() const { return static_cast<int>(subs_.size()); }
    int id_of(const Subgroup& s) const;
    int join(int a, int b) const { return join_[a][static_cast<std::size_t>(b)]; }
    const Subgroup& at(int id) const { return subs_[static_cast<std::size_t>(id)]; }

private:
    std::vector<Subgroup> subs_;
    std::vector<std::vector<int>> join_;
    int trivial_ = 0;
    int full_ = 0;
};

struct EnumerateOptions {
    int threads = 0;  // 0 = hardware concurrency, 1 = fully sequential
};

// Depth-first enumeration of all surjective component tuples of discriminant
// at most B satisfying the local conditions. Primes are chosen largest-first
// so the top-level branching doubles as the parallel work split; unit-part
// rules prune during the search and the remaining rules run at the leaves.
class Enumerator {
public:
    Enumerator(FinAbGroup g, const mpz_class& bound, LocalConditionSet conditions = {},
               EnumerateOptions opts = {});
    ~Enumerator();

    Enumerator(const Enumerator&) = delete;
    Enumerator& operator=(const Enumerator&) = delete;

    // Deterministic order: ascending discriminant, then component encoding.
    void for_each(const std::function<void(const GExtensionQ&)>& visit) const;

    // Parallel, unordered; `visit` may be called concurrently.
    void visit_unordered(const std::function<void(const GExtensionQ&)>& visit) const;

    mpz_class count() const;
    std::vector<GExtensionQ> collect() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Independent oracle backend: all surjections of the unit groups mod m for
// m <= M with conductor exactly m, converted to components and filtered by
// discriminant. M must cover every conductor reachable within the bound
// (see modulus_bound); too small an M silently misses extensions.
std::vector<GExtensionQ> enumerate_by_modulus(const FinAbGroup& g, const mpz_class& bound,
                                              std::int64_t max_modulus);

// Safe conductor cover: every extension of discriminant <= B has conductor
// <= modulus_bound(G, B).
mpz_class modulus_bound(const FinAbGroup& g, const mpz_class& bound);

}  // namespace abelext
