#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {

struct WaldResult {
  double wald = 0.0;
  bool degenerate = false;  // cause block dropped for lack of variation
  int t_used = 0;           // post-lag sample length
};

// Wald statistic for Granger non-causality in one entity: regress effect_t
// on an intercept, K own lags and K lags of the cause, and test the joint
// nullity of the K cause coefficients with the homoskedastic covariance
// s^2 (X'X)^{-1}. When the cause columns carry no variation they are
// dropped and the statistic is 0 by convention, flagged degenerate.
WaldResult individual_wald(const Eigen::VectorXd& effect,
                           const Eigen::VectorXd& cause, int K);

struct DhAggregates {
  double w_bar = 0.0;
  double z_bar = 0.0;
  double z_bar_tilde = 0.0;
};

// Aggregate statistics from the per-entity Walds (Dumitrescu-Hurlin 2012):
//   z_bar       = sqrt(N/(2K)) (w_bar - K)
//   z_bar_tilde = sqrt(N/(2K)) sqrt((T-2K-5)/(T-K-3))
//                 ((T-2K-3)/(T-2K-1) w_bar - K)
// with T the post-lag sample length used by the individual regressions.
// z_bar_tilde is NaN when T <= 2K+5.
DhAggregates dh_aggregates(const std::vector<double>& walds, int K,
                           int t_used);

struct DhReport {
  std::string cause, effect;
  int lag_order = 0;
  std::vector<double> wald_individual;  // entity order of the panel
  double w_bar = 0.0, z_bar = 0.0, z_bar_tilde = 0.0;
  double p_z_bar = 1.0, p_z_bar_tilde = 1.0;  // two-sided normal
  int n_panels = 0;
  int t_used = 0;
  bool any_degenerate = false;
};

DhReport dh_test(const Panel& panel, const std::string& cause,
                 const std::string& effect, int K);

}  // namespace panelkit
