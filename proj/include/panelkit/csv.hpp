#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {

// Long-format panel CSV: header "entity,period,<var1>,...,<varK>", periods
// "YYYYQ#", decimal point, UTF-8. Row order is irrelevant. Declared
// natural-log transforms are applied after the balanced panel is built.
// Parse failures name the offending row and column.
Panel ingest_csv(const std::string& path,
                 const std::vector<VariableSpec>& mapping = {});

// Annual series CSV: header "entity,year,value".
std::map<std::string, std::vector<std::pair<int, double>>> read_annual_csv(
    const std::string& path);

// Step-hold expansion of an annual series over a quarter range: each year's
// value is repeated for its four quarters. Every year covered by the range
// must be present.
std::vector<double> expand_annual(
    const std::vector<std::pair<int, double>>& annual, Quarter from,
    Quarter to);

// Adds (or replaces) a variable from annual per-entity data, expanded over
// the panel's periods.
Panel merge_annual_variable(
    const Panel& panel, const std::string& name,
    const std::map<std::string, std::vector<std::pair<int, double>>>& annual);

// Writes a panel in the long CSV format (used by the simulate subcommand).
void write_panel_csv(const Panel& panel, const std::string& path);

}  // namespace panelkit
