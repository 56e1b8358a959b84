#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "panelkit/coint.hpp"
#include "panelkit/panel.hpp"

namespace panelkit {

enum class FmolsMode { Pooled, Grouped };

struct FmolsOptions {
  int bandwidth = 3;
  // Zeroes the endogeneity and serial-correlation corrections, collapsing
  // the estimator to OLS on the same sample; used by the test oracles.
  bool zero_corrections = false;
};

struct FmolsEntityFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd t_stats;
  Eigen::MatrixXd omega;        // long-run covariance of (u, dx), audit
  Eigen::MatrixXd xtx;          // regressor moment matrix of the sample
  Eigen::VectorXd corrected_xy; // sum x y+ - T delta+, audit
  double cond_lrv = 0.0;        // conditional long-run variance of u
  bool zero_residual_variance = false;
};

// Entity-level fully modified OLS (Phillips-Hansen construction). y and X
// must be demeaned (the entity intercept absorbed); the estimation sample
// drops the first observation, which the differenced regressors consume:
//
//   y+_t   = y_t - O12 O22^{-1} dx_t
//   delta+ = L+_{u.dx} - L+_{dx.dx} O22^{-1} O21
//   b_fm   = (sum x x')^{-1} (sum x y+ - T* delta+)
//
// with O (L+) the two-sided (one-sided, including the contemporaneous term)
// Bartlett long-run covariance of (u_t, dx_t) and u the OLS residuals.
// t statistics use the conditional long-run variance O11 - O12 O22^{-1} O21.
FmolsEntityFit fmols_entity(const Eigen::VectorXd& y,
                            const Eigen::MatrixXd& X,
                            const FmolsOptions& opts = {});

struct FmolsReport {
  FmolsMode mode = FmolsMode::Pooled;
  std::vector<std::string> regressors;
  Eigen::VectorXd coefficients;
  Eigen::VectorXd t_stats;
  std::vector<std::pair<std::string, FmolsEntityFit>> per_entity;
  int bandwidth = 3;
  int n_obs_used = 0;
};

// Panel FMOLS. Pooled mode sums the corrected moment matrices across
// entities before solving and uses the cross-entity average conditional
// long-run variance for the t statistics; grouped mode averages the entity
// estimates and combines t statistics as sum_i t_i / sqrt(N).
FmolsReport fmols_panel(const Panel& panel, const CointSpec& spec,
                        FmolsMode mode, const FmolsOptions& opts = {});

}  // namespace panelkit
