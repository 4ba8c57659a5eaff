#include "abelext/survey.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace abelext {

std::vector<SurveyRow> run_survey(const FinAbGroup& g, std::vector<mpz_class> bounds,
                                  const SurveyOptions& opts) {
    if (bounds.empty()) throw std::invalid_argument("survey needs at least one bound");
    std::sort(bounds.begin(), bounds.end());

    std::vector<SurveyRow> delta(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) delta[i].bound = bounds[i];

    Enumerator enumerator(g, bounds.back(), opts.conditions,
                          EnumerateOptions{.threads = opts.threads});
    std::mutex mu;
    enumerator.visit_unordered([&](const GExtensionQ& ext) {
        HnpReport report = hasse_norm_test(ext);
        bool sufficient = opts.check_sufficiency && lemma_6_13_predicate(ext);
        std::int64_t sha = report.sha_order.fits_slong_p() ? report.sha_order.get_si() : -1;
        auto it = std::lower_bound(bounds.begin(), bounds.end(), ext.discriminant);
        std::size_t idx = static_cast<std::size_t>(it - bounds.begin());

        std::lock_guard<std::mutex> lock(mu);
        SurveyRow& row = delta[idx];
        ++row.n;
        if (!report.hnp_holds) ++row.n_fail_hnp;
        if (!report.wa_holds) ++row.n_fail_wa;
        ++row.sha_histogram[sha];
        if (sufficient) {
            ++row.n_sufficient;
            if (report.hnp_holds) ++row.n_sufficient_but_hnp_holds;
        }
    });

    // prefix-accumulate: row k covers every discriminant <= bounds[k]
    for (std::size_t i = 1; i < delta.size(); ++i) {
        delta[i].n += delta[i - 1].n;
        delta[i].n_fail_hnp += delta[i - 1].n_fail_hnp;
        delta[i].n_fail_wa += delta[i - 1].n_fail_wa;
        delta[i].n_sufficient += delta[i - 1].n_sufficient;
        delta[i].n_sufficient_but_hnp_holds += delta[i - 1].n_sufficient_but_hnp_holds;
        for (const auto& [order, count] : delta[i - 1].sha_histogram)
            delta[i].sha_histogram[order] += count;
    }
    return delta;
}

}  // namespace abelext
