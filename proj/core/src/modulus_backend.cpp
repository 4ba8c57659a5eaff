#include <algorithm>
#include <map>
#include <stdexcept>

#include "abelext/enumerate.hpp"
#include "abelext/numtheory.hpp"

namespace abelext {

namespace {

// Components at p of conductor exponent exactly `level`.
using LevelTable = std::map<int, std::vector<LocalComponent>>;

const LevelTable& level_table(std::map<std::int64_t, LevelTable>& cache, const FinAbGroup& g,
                              std::int64_t p) {
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    LevelTable table;
    for (auto& c : enumerate_local_components(g, p)) table[c.level].push_back(std::move(c));
    return cache.emplace(p, std::move(table)).first->second;
}

}  // namespace

std::vector<GExtensionQ> enumerate_by_modulus(const FinAbGroup& g, const mpz_class& bound,
                                              std::int64_t max_modulus) {
    if (g.trivial()) throw std::invalid_argument("enumeration needs a nontrivial group");
    if (max_modulus < 1 || max_modulus > 100'000'000)
        throw std::invalid_argument("modulus cap out of range");

    // smallest-prime-factor sieve for fast factorization of every modulus
    std::vector<std::int32_t> spf(static_cast<std::size_t>(max_modulus) + 1, 0);
    for (std::int64_t i = 2; i <= max_modulus; ++i) {
        if (spf[i] != 0) continue;
        for (std::int64_t j = i; j <= max_modulus; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }

    std::map<std::int64_t, LevelTable> cache;
    std::vector<GExtensionQ> out;
    std::vector<const std::vector<LocalComponent>*> slots;
    std::vector<std::size_t> pick;

    for (std::int64_t m = 2; m <= max_modulus; ++m) {
        // factor m and gather the level-exact component lists per prime
        slots.clear();
        std::int64_t rest = m;
        bool feasible = true;
        while (rest > 1) {
            std::int64_t p = spf[rest];
            int a = 0;
            while (rest % p == 0) {
                rest /= p;
                ++a;
            }
            const LevelTable& table = level_table(cache, g, p);
            auto it = table.find(a);
            if (it == table.end() || it->second.empty()) {
                feasible = false;
                break;
            }
            slots.push_back(&it->second);
        }
        if (!feasible) continue;

        // cartesian product over the per-prime choices
        pick.assign(slots.size(), 0);
        while (true) {
            std::vector<LocalComponent> comps;
            comps.reserve(slots.size());
            for (std::size_t i = 0; i < slots.size(); ++i) comps.push_back((*slots[i])[pick[i]]);
            GExtensionQ ext = make_extension(g, std::move(comps));
            if (ext.surjective && ext.discriminant <= bound) out.push_back(std::move(ext));

            std::size_t i = 0;
            while (i < slots.size()) {
                if (++pick[i] < slots[i]->size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == slots.size()) break;
        }
    }

    std::sort(out.begin(), out.end(), extension_stream_less);
    return out;
}

}  // namespace abelext
