#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {

// Synthetic panel generators, deterministic given the seed. Innovations are
// iid standard normal scaled as noted; every family draws one independent
// substream per entity, so entity e's data do not depend on N.
//
//   independent-random-walks:  y_t = y_{t-1} + noise_sd e_t, same for each
//       regressor; with entity_trends each series also gains a per-entity
//       drift trend_slope (e+1).
//   cointegrated-homogeneous:  x_j random walks; u AR(1) with coefficient
//       error_rho and innovation sd noise_sd; y = intercept + beta sum_j x_j + u.
//   cointegrated-heterogeneous: slopes beta_e evenly spaced over
//       [beta - beta_spread, beta + beta_spread]; optional entity trends.
//   ecm-pmg:  x_j random walks; phi_e evenly spaced over [phi_min, phi_max];
//       z_t = (1 + phi_e) z_{t-1} + noise_sd e_t started from its stationary
//       distribution; y = alpha_e + theta' x + z, alpha_e = intercept + e.
//       Equivalently dy_t = phi_e z_{t-1} + theta' dx_t + noise_sd e_t.
//   causal-var:  x_t = var_cause_ar x_{t-1} + e1_t;
//       y_t = var_self y_{t-1} + var_causal x_{t-1} + noise_sd e2_t.
struct DgpSpec {
  enum class Family {
    IndependentRandomWalks,
    CointegratedHomogeneous,
    CointegratedHeterogeneous,
    EcmPmg,
    CausalVar
  };
  Family family = Family::IndependentRandomWalks;
  int n_entities = 6;
  int n_periods = 40;
  uint64_t seed = 1;

  int n_regressors = 1;
  double beta = 2.0;
  double beta_spread = 0.5;
  double noise_sd = 1.0;
  double error_rho = 0.0;
  double intercept = 1.0;
  bool entity_trends = false;
  double trend_slope = 0.05;
  std::vector<double> theta = {0.5};
  double phi_min = -0.6;
  double phi_max = -0.1;
  double var_self = 0.5;
  double var_causal = 0.0;
  double var_cause_ar = 0.5;

  // Dependent then regressor names; defaults Y, X1..Xk.
  std::vector<std::string> variable_names;
  Quarter start{2009, 1};
};

DgpSpec::Family dgp_family_from_string(const std::string& name);
std::string dgp_family_to_string(DgpSpec::Family family);

Panel synth_dgp(const DgpSpec& spec);

}  // namespace panelkit
