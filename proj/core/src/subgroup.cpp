#include "abelext/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abelext {

namespace {

IntMat lattice_matrix(const FinAbGroup& g, const std::vector<GroupElement>& gens) {
    const std::size_t l = g.rank();
    IntMat m(0, l);
    for (const auto& x : gens) {
        if (x.coords.size() != l) throw std::invalid_argument("generator rank mismatch");
        m.append_row(x.coords);
    }
    for (std::size_t j = 0; j < l; ++j) {
        std::vector<std::int64_t> row(l, 0);
        row[j] = g.factor(j);
        m.append_row(row);
    }
    return m;
}

}  // namespace

Subgroup::Subgroup(FinAbGroup ambient, std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)), gens_(std::move(generators)) {
    if (ambient_.rank() == 0) {
        basis_ = IntMat(0, 0);
        order_ = 1;
        return;
    }
    basis_ = hermite_normal_form(lattice_matrix(ambient_, gens_));
    mpz_class det = 1;
    for (std::size_t j = 0; j < basis_.rows; ++j) det *= basis_.at(j, j);
    order_ = ambient_.order() / det;
}

Subgroup Subgroup::trivial(const FinAbGroup& g) { return Subgroup(g, {}); }

Subgroup Subgroup::full(const FinAbGroup& g) {
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        GroupElement e = g.zero();
        e.coords[j] = 1;
        gens.push_back(std::move(e));
    }
    return Subgroup(g, std::move(gens));
}

bool Subgroup::contains(const GroupElement& x) const {
    if (x.coords.size() != ambient_.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<std::int64_t> sol;
    return solve_upper_triangular(basis_, x.coords, sol);
}

FinAbGroup Subgroup::structure() const {
    const std::size_t l = ambient_.rank();
    if (l == 0) return FinAbGroup();
    // Express the modulus lattice N in terms of the HNF basis B of this
    // subgroup's lattice L; the subgroup is L/N, so its invariant factors
    // are the SNF diagonal of that coordinate matrix.
    IntMat x(l, l);
    for (std::size_t j = 0; j < l; ++j) {
        std::vector<std::int64_t> v(l, 0), sol;
        v[j] = ambient_.factor(j);
        if (!solve_upper_triangular(basis_, v, sol))
            throw std::logic_error("modulus vector not in subgroup lattice");
        for (std::size_t k = 0; k < l; ++k) x.at(j, k) = sol[k];
    }
    return FinAbGroup::from_relations(x);
}

FinAbGroup Subgroup::quotient() const {
    if (ambient_.rank() == 0) return FinAbGroup();
    return FinAbGroup::from_relations(lattice_matrix(ambient_, gens_));
}

Subgroup Subgroup::join(const Subgroup& other) const {
    if (!(ambient_ == other.ambient_)) throw std::invalid_argument("ambient group mismatch");
    std::vector<GroupElement> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return Subgroup(ambient_, std::move(gens));
}

std::vector<GroupElement> Subgroup::elements() const {
    if (!order_.fits_ulong_p() || order_.get_ui() > (1u << 22))
        throw std::domain_error("subgroup too large to list");
    std::set<GroupElement> seen;
    std::vector<GroupElement> work{ambient_.zero()};
    seen.insert(work[0]);
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (const auto& g : gens_) {
            GroupElement next = ambient_.add(work[i], g);
            if (seen.insert(next).second) work.push_back(std::move(next));
        }
    }
    std::sort(work.begin(), work.end());
    return work;
}

bool Subgroup::operator<(const Subgroup& other) const {
    if (order_ != other.order_) return order_ < other.order_;
    return basis_.a < other.basis_.a;
}

}  // namespace abelext
