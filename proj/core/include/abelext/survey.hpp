#pragma once

#include <map>

#include "abelext/enumerate.hpp"
#include "abelext/hnp.hpp"

namespace abelext {

struct SurveyRow {
    mpz_class bound;
    std::uint64_t n = 0;
    std::uint64_t n_fail_hnp = 0;
    std::uint64_t n_fail_wa = 0;
    std::map<std::int64_t, std::uint64_t> sha_histogram;  // |Sha| -> count

    // Lemma "small inertia or cyclic decomposition" bookkeeping; populated
    // only when the sufficiency check is requested (non-excluded groups).
    std::uint64_t n_sufficient = 0;
    std::uint64_t n_sufficient_but_hnp_holds = 0;  // sufficiency demands 0
};

struct SurveyOptions {
    int threads = 0;
    bool check_sufficiency = false;  // evaluate lemma_6_13_predicate per extension
    LocalConditionSet conditions;
};

// One enumeration pass at the largest bound; every extension gets a full
// HNP/WA report and is accumulated into each row whose bound covers it.
std::vector<SurveyRow> run_survey(const FinAbGroup& g, std::vector<mpz_class> bounds,
                                  const SurveyOptions& opts = {});

}  // namespace abelext
