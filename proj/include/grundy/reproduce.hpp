#pragma once

#include "grundy/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grundy {

enum class RowStatus { pass, fail, inconclusive };

struct ReproRow {
    std::string id;
    std::string claim;
    std::string observed;
    RowStatus status = RowStatus::fail;
};

struct ReproReport {
    std::vector<ReproRow> rows;
    // true when no row failed; inconclusive rows (budget ran out before a
    // verdict) do not count against it
    bool all_pass = true;
};

// Recomputes every tabulated result from scratch. Output depends only on the
// budget and seed, never on wall-clock, so reruns are byte-identical. An
// empty `only` list runs everything; otherwise ids must match known rows.
ReproReport run_reproduction(const std::vector<std::string>& only = {},
                             const SearchBudget& budget = {}, std::uint64_t seed = 20240529);

std::string to_markdown(const ReproReport& report);
std::string to_csv(const ReproReport& report);

}  // namespace grundy
