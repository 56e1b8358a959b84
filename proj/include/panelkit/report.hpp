#pragma once

#include <optional>
#include <string>
#include <vector>

#include "panelkit/coint.hpp"
#include "panelkit/dh.hpp"
#include "panelkit/fe_ecm.hpp"
#include "panelkit/fmols.hpp"
#include "panelkit/panel.hpp"
#include "panelkit/pmg.hpp"

namespace panelkit {

struct DescriptiveTable {
  std::vector<std::string> variables;
  struct Row {
    std::string group;  // "All panels" or an entity id
    std::vector<double> mean, sd;
    int n_obs = 0;
  };
  std::vector<Row> rows;
};

DescriptiveTable describe(const Panel& panel,
                          const std::vector<std::string>& variable_order);

struct UnitRootTable {
  struct Row {
    std::string variable, entity;  // entity "Average" for the cross-entity mean
    double level_stat = 0.0, diff_stat = 0.0;
  };
  std::vector<Row> rows;
  int aug_lags = 1;
};

// Cross-entity averages of the PMG short-run coefficients with mean-group
// style z statistics (mean over sd/sqrt(N)); the "Total" row of the
// short-run table.
struct PmgTotals {
  std::vector<std::string> names;  // COINTEQ01 then the short-run terms
  std::vector<double> mean, z;
};
PmgTotals pmg_totals(const PmgFit& fit);

struct ReportBundle {
  std::optional<DescriptiveTable> descriptive;
  std::optional<UnitRootTable> unit_roots;
  std::optional<CointReport> kao;
  std::optional<CointReport> pedroni;
  std::vector<DhReport> dh;
  std::optional<FmolsReport> fmols_pooled;
  std::optional<FmolsReport> fmols_grouped;
  std::optional<PmgFit> pmg;
  std::optional<PmgTotals> pmg_total;
  std::vector<FeEcmReport> fe_ecm;
  std::string error_stage;    // first failing stage, empty when clean
  std::string error_message;
};

// Human-readable rendering of every populated section, 4-decimal display
// with the 10/5/1% star convention.
std::string render_text(const ReportBundle& bundle);

// Writes report.txt plus one machine-readable JSON document per populated
// stage into output_dir; returns the file names written. Output depends
// only on the bundle contents, so identical runs give identical bytes.
std::vector<std::string> write_bundle(const ReportBundle& bundle,
                                      const std::string& output_dir);

}  // namespace panelkit
