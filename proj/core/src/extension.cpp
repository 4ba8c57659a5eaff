#include "abelext/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelext {

const LocalComponent* GExtensionQ::component_at(std::int64_t p) const {
    for (const auto& c : components)
        if (c.p == p) return &c;
    return nullptr;
}

GExtensionQ make_extension(FinAbGroup g, std::vector<LocalComponent> components) {
    GExtensionQ ext;
    ext.group = std::move(g);
    ext.components = std::move(components);
    std::sort(ext.components.begin(), ext.components.end(),
              [](const LocalComponent& a, const LocalComponent& b) { return a.p < b.p; });
    ext.discriminant = 1;
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < ext.components.size(); ++i) {
        const auto& c = ext.components[i];
        if (c.trivial()) throw std::invalid_argument("stored components must be nontrivial");
        if (i > 0 && ext.components[i - 1].p == c.p)
            throw std::invalid_argument("duplicate component prime");
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(c.p),
                      static_cast<unsigned long>(local_disc_exponent(ext.group, c)));
        ext.discriminant *= pw;
        if (c.p == 2) {
            gens.push_back(c.eps);
            gens.push_back(c.w);
        } else {
            gens.push_back(c.gamma);
        }
    }
    ext.surjective = Subgroup(ext.group, std::move(gens)).is_full();
    return ext;
}

bool extension_stream_less(const GExtensionQ& a, const GExtensionQ& b) {
    if (a.discriminant != b.discriminant) return a.discriminant < b.discriminant;
    auto encode = [](const GExtensionQ& e) {
        std::vector<std::int64_t> enc;
        for (const auto& c : e.components) {
            enc.push_back(c.p);
            auto k = c.key();
            enc.insert(enc.end(), k.begin(), k.end());
        }
        return enc;
    };
    return encode(a) < encode(b);
}

GroupElement frobenius_at(const GExtensionQ& ext, std::int64_t p) {
    GroupElement f = ext.group.zero();
    for (const auto& c : ext.components) {
        if (c.p == p) continue;
        f = ext.group.add(f, evaluate(ext.group, c, p));
    }
    return f;
}

Subgroup decomposition_at(const GExtensionQ& ext, std::int64_t p) {
    std::vector<GroupElement> gens{frobenius_at(ext, p)};
    if (const LocalComponent* c = ext.component_at(p)) {
        if (c->p == 2) {
            gens.push_back(c->eps);
            gens.push_back(c->w);
        } else {
            gens.push_back(c->gamma);
        }
    }
    return Subgroup(ext.group, std::move(gens));
}

DecompositionData decomposition_data(const GExtensionQ& ext) {
    if (!ext.surjective) throw std::invalid_argument("decomposition data needs a surjective extension");
    DecompositionData data{.ramified = {}, .at_infinity = Subgroup::trivial(ext.group)};
    GroupElement complex_conj = ext.group.zero();
    for (const auto& c : ext.components)
        complex_conj = ext.group.add(complex_conj, evaluate(ext.group, c, -1));
    data.at_infinity = Subgroup(ext.group, {complex_conj});
    for (const auto& c : ext.components) {
        PlaceData place{.p = c.p,
                        .inertia = inertia_subgroup(ext.group, c),
                        .frobenius = frobenius_at(ext, c.p),
                        .decomposition = Subgroup::trivial(ext.group)};
        auto gens = place.inertia.generators();
        gens.push_back(place.frobenius);
        place.decomposition = Subgroup(ext.group, std::move(gens));
        data.ramified.push_back(std::move(place));
    }
    return data;
}

}  // namespace abelext
