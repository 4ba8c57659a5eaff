#include "abelext/fin_ab_group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abelext {

QmodZ qmodz(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    if (num == 0) return QmodZ{0, 1};
    return QmodZ{num / g, den / g};
}

QmodZ qmodz_add(QmodZ x, QmodZ y) {
    std::int64_t den = lcm64(x.den, y.den);
    std::int64_t num = checked_mul(x.num, den / x.den) + checked_mul(y.num, den / y.den);
    return qmodz(num, den);
}

FinAbGroup::FinAbGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (factors_[j] <= 1) throw std::invalid_argument("invariant factors must exceed 1");
        if (j + 1 < factors_.size() && factors_[j] % factors_[j + 1] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
    for (auto n : factors_) order_ *= n;
}

FinAbGroup FinAbGroup::parse(const std::string& text) {
    std::vector<std::int64_t> factors;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(part, &pos);
        while (pos < part.size() && std::isspace(static_cast<unsigned char>(part[pos]))) ++pos;
        if (pos != part.size()) throw std::invalid_argument("bad group literal: " + text);
        factors.push_back(v);
    }
    if (factors.empty()) throw std::invalid_argument("empty group literal");
    return FinAbGroup(std::move(factors));
}

FinAbGroup FinAbGroup::from_relations(const IntMat& relations) {
    auto d = smith_diagonal(relations);
    if (relations.rows < relations.cols)
        throw std::invalid_argument("presented group is infinite");
    std::vector<std::int64_t> factors;
    // SNF diagonal is increasing under divisibility; the chain wants the
    // largest factor first.
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        if (*it == 0) throw std::invalid_argument("presented group is infinite");
        if (*it > 1) factors.push_back(*it);
    }
    return FinAbGroup(std::move(factors));
}

std::uint64_t FinAbGroup::element_count() const {
    if (!order_.fits_ulong_p()) throw std::domain_error("group too large to enumerate");
    return order_.get_ui();
}

GroupElement FinAbGroup::element_at(std::uint64_t index) const {
    GroupElement g = zero();
    for (std::size_t j = rank(); j-- > 0;) {
        g.coords[j] = static_cast<std::int64_t>(index % factors_[j]);
        index /= factors_[j];
    }
    return g;
}

void FinAbGroup::check_element(const GroupElement& x) const {
    if (x.coords.size() != rank()) throw std::invalid_argument("element/group rank mismatch");
}

GroupElement FinAbGroup::reduce(std::vector<std::int64_t> coords) const {
    if (coords.size() != rank()) throw std::invalid_argument("element/group rank mismatch");
    for (std::size_t j = 0; j < coords.size(); ++j) {
        coords[j] %= factors_[j];
        if (coords[j] < 0) coords[j] += factors_[j];
    }
    return GroupElement{std::move(coords)};
}

GroupElement FinAbGroup::add(const GroupElement& x, const GroupElement& y) const {
    check_element(x);
    check_element(y);
    GroupElement r = x;
    for (std::size_t j = 0; j < rank(); ++j) {
        r.coords[j] += y.coords[j];
        if (r.coords[j] >= factors_[j]) r.coords[j] -= factors_[j];
    }
    return r;
}

GroupElement FinAbGroup::sub(const GroupElement& x, const GroupElement& y) const {
    return add(x, neg(y));
}

GroupElement FinAbGroup::neg(const GroupElement& x) const {
    check_element(x);
    GroupElement r = x;
    for (std::size_t j = 0; j < rank(); ++j)
        if (r.coords[j] != 0) r.coords[j] = factors_[j] - r.coords[j];
    return r;
}

GroupElement FinAbGroup::scale(std::int64_t k, const GroupElement& x) const {
    check_element(x);
    GroupElement r = zero();
    for (std::size_t j = 0; j < rank(); ++j) {
        std::int64_t m = factors_[j];
        std::int64_t kk = k % m;
        if (kk < 0) kk += m;
        r.coords[j] = static_cast<std::int64_t>(
            static_cast<__int128>(kk) * x.coords[j] % m);
    }
    return r;
}

std::int64_t FinAbGroup::element_order(const GroupElement& x) const {
    check_element(x);
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < rank(); ++j) {
        std::int64_t m = factors_[j];
        std::int64_t comp_ord = m / std::gcd(m, x.coords[j]);
        ord = lcm64(ord, comp_ord);
    }
    return ord;
}

QmodZ FinAbGroup::character_value(const GroupElement& chi, const GroupElement& g) const {
    check_element(chi);
    check_element(g);
    QmodZ v{0, 1};
    for (std::size_t j = 0; j < rank(); ++j) {
        std::int64_t m = factors_[j];
        std::int64_t num = static_cast<std::int64_t>(
            static_cast<__int128>(chi.coords[j]) * g.coords[j] % m);
        v = qmodz_add(v, qmodz(num, m));
    }
    return v;
}

std::string FinAbGroup::to_string() const {
    if (trivial()) return "1";
    std::string s;
    for (std::size_t j = 0; j < rank(); ++j) {
        if (j) s += ',';
        s += std::to_string(factors_[j]);
    }
    return s;
}

}  // namespace abelext
