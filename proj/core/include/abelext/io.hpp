#pragma once

#include <string>

#include "abelext/hnp.hpp"
#include "abelext/survey.hpp"

namespace abelext {

// JSON encodings (canonical: keys sorted, no whitespace):
//   odd p component  {"gamma":[...],"p":p}
//   p = 2 component  {"eps":[...],"p":2,"w":[...]}
//   extension        {"components":[...],"disc":"<decimal>","group":"n1,n2",
//                     "surjective":true}
// Big integers travel as decimal strings.

std::string component_to_json(const LocalComponent& c);
LocalComponent component_from_json(const FinAbGroup& g, const std::string& text);

std::string extension_to_json(const GExtensionQ& ext);

// Parses an extension record; accepts either the full object above or a bare
// component array when `group_hint` supplies the group. Surjectivity and the
// discriminant are recomputed, never trusted.
GExtensionQ extension_from_json(const std::string& text, const FinAbGroup* group_hint);

// Reads an extension file and demands surjectivity.
GExtensionQ parse_extension_input(const std::string& path, const FinAbGroup* group_hint);

// Condition files: a JSON array with one {"default": "<rule>"} entry plus
// {"p": <prime>, "rule": "<rule>", ...} entries; AllowedComponents carries
// "components", FullLocalPredicate carries "predicate".
LocalConditionSet conditions_from_json(const std::string& text, const FinAbGroup& g);
LocalConditionSet load_conditions(const std::string& path, const FinAbGroup& g);

std::string hnp_report_to_json(const HnpReport& report);

// CSV header B,N,N_fail_hnp,N_fail_wa,sha_histogram with the histogram as
// semicolon-separated order:count pairs.
std::string survey_to_csv(const std::vector<SurveyRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace abelext
