#include "abelext/exterior.hpp"

#include <stdexcept>

namespace abelext {

ExtSquare::ExtSquare(FinAbGroup ambient) : ambient_(std::move(ambient)), order_(1) {
    const std::size_t l = ambient_.rank();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            pairs_.emplace_back(i, j);
            moduli_.push_back(ambient_.factor(j));
            order_ *= ambient_.factor(j);
        }
}

std::int64_t ExtSquare::exponent() const {
    std::int64_t e = 1;
    for (auto m : moduli_) e = lcm64(e, m);
    return e;
}

ExtElement ExtSquare::reduce(std::vector<std::int64_t> coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("exterior coordinate mismatch");
    for (std::size_t k = 0; k < coords.size(); ++k) {
        coords[k] %= moduli_[k];
        if (coords[k] < 0) coords[k] += moduli_[k];
    }
    return ExtElement{std::move(coords)};
}

ExtElement ExtSquare::add(const ExtElement& x, const ExtElement& y) const {
    ExtElement r = x;
    for (std::size_t k = 0; k < dim(); ++k) {
        r.coords[k] += y.coords[k];
        if (r.coords[k] >= moduli_[k]) r.coords[k] -= moduli_[k];
    }
    return r;
}

ExtElement ExtSquare::wedge(const GroupElement& x, const GroupElement& y) const {
    if (x.coords.size() != ambient_.rank() || y.coords.size() != ambient_.rank())
        throw std::invalid_argument("wedge arguments must live in the ambient group");
    std::vector<std::int64_t> coords(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        auto [i, j] = pairs_[k];
        __int128 v = static_cast<__int128>(x.coords[i]) * y.coords[j] -
                     static_cast<__int128>(x.coords[j]) * y.coords[i];
        std::int64_t m = moduli_[k];
        coords[k] = static_cast<std::int64_t>(((v % m) + m) % m);
    }
    return ExtElement{std::move(coords)};
}

std::string ExtSquare::debug_string(const ExtElement& x) const {
    std::string s = "[";
    for (std::size_t k = 0; k < dim(); ++k) {
        if (k) s += ", ";
        auto [i, j] = pairs_[k];
        s += "e" + std::to_string(i + 1) + "^e" + std::to_string(j + 1) + ": " +
             std::to_string(x.coords[k]) + " mod " + std::to_string(moduli_[k]);
    }
    return s + "]";
}

namespace {

IntMat ext_lattice_matrix(const ExtSquare& e, const std::vector<ExtElement>& gens) {
    const std::size_t d = e.dim();
    IntMat m(0, d);
    for (const auto& x : gens) {
        if (x.coords.size() != d) throw std::invalid_argument("exterior generator mismatch");
        m.append_row(x.coords);
    }
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::int64_t> row(d, 0);
        row[k] = e.moduli()[k];
        m.append_row(row);
    }
    return m;
}

}  // namespace

ExtSubgroup::ExtSubgroup(ExtSquare ambient, std::vector<ExtElement> generators)
    : ambient_(std::move(ambient)), gens_(std::move(generators)) {
    if (ambient_.dim() == 0) {
        basis_ = IntMat(0, 0);
        order_ = 1;
        return;
    }
    basis_ = hermite_normal_form(ext_lattice_matrix(ambient_, gens_));
    mpz_class det = 1;
    for (std::size_t j = 0; j < basis_.rows; ++j) det *= basis_.at(j, j);
    order_ = ambient_.order() / det;
}

ExtSubgroup ExtSubgroup::trivial(const ExtSquare& e) { return ExtSubgroup(e, {}); }

bool ExtSubgroup::contains(const ExtElement& x) const {
    if (ambient_.dim() == 0) return true;
    std::vector<std::int64_t> sol;
    return solve_upper_triangular(basis_, x.coords, sol);
}

FinAbGroup ExtSubgroup::quotient() const {
    if (ambient_.dim() == 0) return FinAbGroup();
    return FinAbGroup::from_relations(ext_lattice_matrix(ambient_, gens_));
}

ExtSubgroup subgroup_wedge_image(const ExtSquare& ext, const Subgroup& d) {
    if (!(d.ambient() == ext.ambient()))
        throw std::invalid_argument("subgroup does not live in the exterior square's group");
    std::vector<ExtElement> gens;
    const auto& dg = d.generators();
    for (std::size_t a = 0; a < dg.size(); ++a)
        for (std::size_t b = a + 1; b < dg.size(); ++b)
            gens.push_back(ext.wedge(dg[a], dg[b]));
    return ExtSubgroup(ext, std::move(gens));
}

ExtSubgroup span_sum(const ExtSquare& ext, std::span<const ExtSubgroup> parts) {
    std::vector<ExtElement> gens;
    for (const auto& part : parts) {
        if (!(part.ambient() == ext))
            throw std::invalid_argument("span_sum parts must share the ambient exterior square");
        gens.insert(gens.end(), part.generators().begin(), part.generators().end());
    }
    return ExtSubgroup(ext, std::move(gens));
}

mpz_class index_in_ambient(const ExtSubgroup& v) {
    return v.ambient().order() / v.order();
}

}  // namespace abelext
