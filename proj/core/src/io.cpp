#include "abelext/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace abelext {

using nlohmann::json;

namespace {

json coords_to_json(const GroupElement& e) {
    json arr = json::array();
    for (auto c : e.coords) arr.push_back(c);
    return arr;
}

GroupElement coords_from_json(const FinAbGroup& g, const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected coordinate array");
    std::vector<std::int64_t> coords;
    for (const auto& v : arr) coords.push_back(v.get<std::int64_t>());
    return g.reduce(std::move(coords));
}

json component_json(const LocalComponent& c) {
    json obj;
    obj["p"] = c.p;
    if (c.p == 2) {
        obj["eps"] = coords_to_json(c.eps);
        obj["w"] = coords_to_json(c.w);
    } else {
        obj["gamma"] = coords_to_json(c.gamma);
    }
    return obj;
}

LocalComponent component_parse(const FinAbGroup& g, const json& obj) {
    std::int64_t p = obj.at("p").get<std::int64_t>();
    if (p == 2)
        return make_two_component(g, coords_from_json(g, obj.at("eps")),
                                  coords_from_json(g, obj.at("w")));
    return make_odd_component(g, p, coords_from_json(g, obj.at("gamma")));
}

json extension_json(const GExtensionQ& ext) {
    json obj;
    obj["group"] = ext.group.to_string();
    obj["disc"] = ext.discriminant.get_str();
    obj["surjective"] = ext.surjective;
    json comps = json::array();
    for (const auto& c : ext.components) comps.push_back(component_json(c));
    obj["components"] = std::move(comps);
    return obj;
}

LocalRuleKind rule_kind_from_name(const std::string& name) {
    if (name == "Any") return LocalRuleKind::Any;
    if (name == "Unramified") return LocalRuleKind::Unramified;
    if (name == "InertiaDividesQ") return LocalRuleKind::InertiaDividesQ;
    if (name == "AllowedComponents") return LocalRuleKind::AllowedComponents;
    if (name == "FullLocalPredicate") return LocalRuleKind::FullLocalPredicate;
    throw std::invalid_argument("unknown rule: " + name);
}

}  // namespace

std::string component_to_json(const LocalComponent& c) { return component_json(c).dump(); }

LocalComponent component_from_json(const FinAbGroup& g, const std::string& text) {
    return component_parse(g, json::parse(text));
}

std::string extension_to_json(const GExtensionQ& ext) { return extension_json(ext).dump(); }

GExtensionQ extension_from_json(const std::string& text, const FinAbGroup* group_hint) {
    json obj = json::parse(text);
    FinAbGroup g;
    const json* comps = nullptr;
    if (obj.is_array()) {
        if (!group_hint) throw std::invalid_argument("bare component array needs a group");
        g = *group_hint;
        comps = &obj;
    } else {
        if (obj.contains("group"))
            g = FinAbGroup::parse(obj.at("group").get<std::string>());
        else if (group_hint)
            g = *group_hint;
        else
            throw std::invalid_argument("extension record without a group");
        comps = &obj.at("components");
    }
    std::vector<LocalComponent> components;
    for (const auto& c : *comps) {
        LocalComponent comp = component_parse(g, c);
        if (!comp.trivial()) components.push_back(std::move(comp));
    }
    return make_extension(std::move(g), std::move(components));
}

GExtensionQ parse_extension_input(const std::string& path, const FinAbGroup* group_hint) {
    GExtensionQ ext = extension_from_json(read_file(path), group_hint);
    if (ext.group.trivial()) throw std::invalid_argument("extension of the trivial group");
    if (ext.components.empty())
        throw std::invalid_argument("no nontrivial components in " + path);
    if (!ext.surjective) throw std::invalid_argument("not surjective: " + path);
    return ext;
}

LocalConditionSet conditions_from_json(const std::string& text, const FinAbGroup& g) {
    json arr = json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("condition file must be a JSON array");
    LocalRule default_rule;
    std::vector<std::pair<std::int64_t, LocalRule>> rules;
    for (const auto& entry : arr) {
        if (entry.contains("default")) {
            default_rule.kind = rule_kind_from_name(entry.at("default").get<std::string>());
            continue;
        }
        LocalRule rule;
        rule.kind = rule_kind_from_name(entry.at("rule").get<std::string>());
        if (rule.kind == LocalRuleKind::AllowedComponents)
            for (const auto& c : entry.at("components"))
                rule.allowed.push_back(component_parse(g, c));
        if (rule.kind == LocalRuleKind::FullLocalPredicate)
            rule.predicate = entry.at("predicate").get<std::string>();
        rules.emplace_back(entry.at("p").get<std::int64_t>(), std::move(rule));
    }
    LocalConditionSet set{default_rule};
    for (auto& [p, rule] : rules) set.set_rule(p, std::move(rule));
    return set;
}

LocalConditionSet load_conditions(const std::string& path, const FinAbGroup& g) {
    return conditions_from_json(read_file(path), g);
}

std::string hnp_report_to_json(const HnpReport& report) {
    json obj;
    obj["hnp"] = report.hnp_holds;
    obj["sha_order"] = report.sha_order.get_str();
    obj["a_order"] = report.a_order.get_str();
    obj["wa"] = report.wa_holds;
    return obj.dump();
}

std::string survey_to_csv(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << "B,N,N_fail_hnp,N_fail_wa,sha_histogram\n";
    for (const auto& row : rows) {
        out << row.bound.get_str() << ',' << row.n << ',' << row.n_fail_hnp << ','
            << row.n_fail_wa << ',';
        bool first = true;
        for (const auto& [order, count] : row.sha_histogram) {
            if (!first) out << ';';
            out << order << ':' << count;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace abelext
