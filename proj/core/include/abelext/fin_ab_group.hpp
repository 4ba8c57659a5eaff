#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "abelext/intmat.hpp"

namespace abelext {

// Element of a finite abelian group in invariant-factor coordinates,
// coords[j] in [0, n_j).
struct GroupElement {
    std::vector<std::int64_t> coords;

    bool is_zero() const {
        for (auto c : coords)
            if (c != 0) return false;
        return true;
    }
    auto operator<=>(const GroupElement&) const = default;
};

// Value of a character, an exact element of Q/Z stored as a reduced
// fraction num/den with 0 <= num < den.
struct QmodZ {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool is_zero() const { return num == 0; }
    std::int64_t order() const { return den; }
    auto operator<=>(const QmodZ&) const = default;
};

QmodZ qmodz(std::int64_t num, std::int64_t den);
QmodZ qmodz_add(QmodZ x, QmodZ y);

// A finite abelian group stored canonically as its chain of invariant
// factors n_1, ..., n_l with n_{j+1} | n_j and every n_j > 1. The trivial
// group is the empty chain. Equality of groups is equality of chains.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<std::int64_t> factors);

    // Comma-separated invariant factors, e.g. "4,2". Rejects chains that
    // violate divisibility, factors <= 1, and empty input.
    static FinAbGroup parse(const std::string& text);

    // Group presented by `generators` columns subject to the relation rows;
    // the invariant factors come out of the Smith normal form. Throws if the
    // presented group is infinite.
    static FinAbGroup from_relations(const IntMat& relations);

    std::size_t rank() const { return factors_.size(); }
    bool trivial() const { return factors_.empty(); }
    std::int64_t factor(std::size_t j) const { return factors_[j]; }
    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_[0]; }
    const mpz_class& order() const { return order_; }

    // Element count as a machine integer; throws if the order exceeds the
    // enumeration range.
    std::uint64_t element_count() const;
    GroupElement element_at(std::uint64_t index) const;

    GroupElement zero() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }
    GroupElement reduce(std::vector<std::int64_t> coords) const;
    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement sub(const GroupElement& x, const GroupElement& y) const;
    GroupElement neg(const GroupElement& x) const;
    GroupElement scale(std::int64_t k, const GroupElement& x) const;

    std::int64_t element_order(const GroupElement& x) const;

    // Characters live in the dual group, which has the same invariant
    // factors; value(chi, g) = sum_j chi_j g_j / n_j in Q/Z.
    QmodZ character_value(const GroupElement& chi, const GroupElement& g) const;

    std::string to_string() const;
    bool operator==(const FinAbGroup&) const = default;

private:
    std::vector<std::int64_t> factors_;
    mpz_class order_ = 1;

    void check_element(const GroupElement& x) const;
};

}  // namespace abelext
