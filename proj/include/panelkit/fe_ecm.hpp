#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {

// Stacked error-correction design. Column naming uses the L. (first lag)
// and LD. (lagged first difference) prefixes; the dependent is the first
// difference D.<name>. The interaction <inst>_<flow> is the pointwise
// product of the institution score and the flow variable. Two lags are
// consumed per entity, so n_obs = N (T - 2).
struct EcmDesign {
  std::vector<std::string> columns;
  Eigen::MatrixXd X;  // n_obs x columns, entity-major row order
  Eigen::VectorXd y;  // D.<dependent>
  std::string dependent_name;
  std::vector<int> entity_of_row;
  std::vector<int> period_of_row;  // index into the panel's period list
  std::vector<std::string> entity_names;
  int n_obs = 0;
  int n_entities = 0;
  int t_used = 0;
  bool degenerate_interaction = false;  // interaction has no variation
};

EcmDesign build_ecm_design(
    const Panel& panel, const std::string& inst_variable = "INST",
    const std::string& flow_variable = "FLOW",
    const std::string& dependent = "HP",
    const std::vector<std::string>& controls = {"INTEREST"},
    const std::vector<std::string>& extra_regressors = {});

struct FeEcmReport {
  std::vector<std::string> columns;
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd z_stats;
  bool entity_fe = true;
  bool time_fe = false;
  int n_obs = 0;
  std::string se_type;  // "conventional" or "cluster-entity"
};

// Panel fixed-effect least squares on the ECM design. Entity effects are
// absorbed by the within transform; with time_fe the two-way within
// transform is used (equivalent to period dummies on a balanced panel).
// Degrees of freedom account for the absorbed effects.
FeEcmReport fe_estimate(const EcmDesign& design, bool time_fe,
                        bool cluster_by_entity = false);

}  // namespace panelkit
