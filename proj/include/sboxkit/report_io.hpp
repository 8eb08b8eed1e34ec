#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sboxkit/criteria.hpp"

namespace sboxkit {

/// Machine form; keys mirror the CriteriaReport fields.
std::string report_to_json(const CriteriaReport& rep);

/// Human form: one "name value" line per scalar plus the matrices.
std::string report_to_text(const CriteriaReport& rep);

/// One aligned row per report, comparison-table layout.
std::string comparison_table(const std::vector<std::string>& names,
                             const std::vector<CriteriaReport>& reports);

/// Writes sac.csv, bic_nl.csv, bic_sac.csv, bic_dd.csv, ddt.csv into dir.
void report_to_csv_dir(const CriteriaReport& rep, const std::filesystem::path& dir);

}  // namespace sboxkit
