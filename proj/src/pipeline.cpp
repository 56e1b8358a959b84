#include "panelkit/pipeline.hpp"

#include <algorithm>

#include "panelkit/adf.hpp"
#include "panelkit/csv.hpp"
#include "panelkit/dh.hpp"
#include "panelkit/errors.hpp"
#include "panelkit/fe_ecm.hpp"
#include "panelkit/fmols.hpp"
#include "panelkit/kao.hpp"
#include "panelkit/pedroni.hpp"
#include "panelkit/pmg.hpp"

namespace panelkit {

namespace {

bool stage_enabled(const PipelineConfig& c, const std::string& stage) {
  return std::find(c.stages.begin(), c.stages.end(), stage) !=
         c.stages.end();
}

UnitRootTable unit_root_table(const Panel& panel, const PipelineConfig& c) {
  UnitRootTable table;
  table.aug_lags = c.aug_lags;
  std::vector<std::string> vars = {c.dependent};
  vars.insert(vars.end(), c.regressors.begin(), c.regressors.end());
  for (const auto& v : vars) {
    if (!panel.has_variable(v)) continue;
    double level_sum = 0.0, diff_sum = 0.0;
    for (int e = 0; e < panel.n_entities(); ++e) {
      const Eigen::VectorXd x = panel.series(e, panel.variable_index(v));
      const double lt =
          adf_test(x, c.aug_lags, Deterministic::Intercept).statistic;
      const double dt = adf_test(diff(x, 1), c.aug_lags,
                                 Deterministic::Intercept)
                            .statistic;
      table.rows.push_back({v, panel.entities()[e], lt, dt});
      level_sum += lt;
      diff_sum += dt;
    }
    table.rows.push_back({v, "Average", level_sum / panel.n_entities(),
                          diff_sum / panel.n_entities()});
  }
  return table;
}

}  // namespace

Panel ingest_from_config(const PipelineConfig& config) {
  if (config.input.empty())
    throw InvalidParametersError("pipeline: no input file configured");
  std::vector<VariableSpec> mapping;
  for (const auto& v : config.log_vars)
    mapping.push_back({v, Transform::NaturalLog, Role::Auxiliary});
  Panel panel = ingest_csv(config.input, mapping);
  if (!config.annual_inst.empty()) {
    panel = merge_annual_variable(panel, config.inst_variable,
                                  read_annual_csv(config.annual_inst));
  }
  return panel;
}

ReportBundle run_pipeline(const Panel& panel, const PipelineConfig& c) {
  ReportBundle bundle;
  std::string current;
  try {
    current = "describe";
    {
      std::vector<std::string> order = {c.dependent};
      order.insert(order.end(), c.regressors.begin(), c.regressors.end());
      bundle.descriptive = describe(panel, order);
      if (c.unit_roots) bundle.unit_roots = unit_root_table(panel, c);
    }

    CointSpec base;
    base.dependent = c.dependent;
    base.regressors = c.regressors;
    base.bandwidth = c.bandwidth;
    base.aug_lags = c.aug_lags;

    if (stage_enabled(c, "kao")) {
      current = "kao";
      CointSpec s = base;
      s.homogeneity = VectorHomogeneity::SameForAll;
      s.deterministic = CointDeterministic::Means;
      bundle.kao = kao_test(panel, s);
    }
    if (stage_enabled(c, "pedroni")) {
      current = "pedroni";
      CointSpec s = base;
      s.homogeneity = VectorHomogeneity::PanelSpecific;
      s.deterministic = c.pedroni_trend
                            ? CointDeterministic::MeansAndTrends
                            : CointDeterministic::Means;
      bundle.pedroni = pedroni_test(panel, s, c.pedroni_group);
    }
    if (stage_enabled(c, "dh")) {
      current = "dh";
      bundle.dh.push_back(dh_test(panel, c.dh_cause, c.dh_effect, c.dh_lags));
      if (c.dh_both_directions)
        bundle.dh.push_back(
            dh_test(panel, c.dh_effect, c.dh_cause, c.dh_lags));
    }
    if (stage_enabled(c, "fmols")) {
      current = "fmols";
      CointSpec s = base;
      FmolsOptions opts;
      opts.bandwidth = c.bandwidth;
      bundle.fmols_pooled = fmols_panel(panel, s, FmolsMode::Pooled, opts);
      bundle.fmols_grouped = fmols_panel(panel, s, FmolsMode::Grouped, opts);
    }
    if (stage_enabled(c, "pmg")) {
      current = "pmg";
      ArdlOrder order;
      order.p = c.pmg_p;
      order.q = c.pmg_q;
      order.q_default = c.pmg_q_default;
      bundle.pmg = pmg_fit(panel, c.dependent, c.regressors, order);
      bundle.pmg_total = pmg_totals(*bundle.pmg);
    }
    if (stage_enabled(c, "ecm")) {
      current = "ecm";
      const EcmDesign design =
          build_ecm_design(panel, c.inst_variable, c.ecm_flow,
                           c.ecm_dependent, c.ecm_controls, c.ecm_extra);
      if (c.ecm_time_fe == "no" || c.ecm_time_fe == "both")
        bundle.fe_ecm.push_back(
            fe_estimate(design, /*time_fe=*/false, c.ecm_cluster));
      if (c.ecm_time_fe == "yes" || c.ecm_time_fe == "both")
        bundle.fe_ecm.push_back(
            fe_estimate(design, /*time_fe=*/true, c.ecm_cluster));
    }
  } catch (const Error& e) {
    bundle.error_stage = current;
    bundle.error_message = e.what();
  }
  return bundle;
}

}  // namespace panelkit
