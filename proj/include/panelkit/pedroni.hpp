#pragma once

#include "panelkit/coint.hpp"

namespace panelkit {

enum class PedroniStat { PanelV, PanelRho, PanelT, GroupRho, GroupT };

// Mean and variance of the limiting functional behind each standardized
// Pedroni statistic: (Z - mu sqrt(N)) / sqrt(nu) => N(0,1) under the null.
// The parametric (ADF) t statistics share the moments of the nonparametric
// t statistics. Values depend on the number of regressors (1..7) and on
// whether panel-specific linear trends are included.
struct LimitMoments {
  double mu = 0.0;
  double nu = 1.0;
};
LimitMoments pedroni_moments(CointDeterministic det, int n_regressors,
                             PedroniStat stat);

// Pedroni residual-based panel cointegration test with panel-specific
// cointegrating vectors and deterministics. The default report carries the
// four within-dimension (panel) statistics, standardized to N(0,1):
//
//   Modified variance ratio      (panel v;   rejects in the right tail)
//   Modified Phillips-Perron t   (panel rho; left tail)
//   Phillips-Perron t            (panel t;   left tail)
//   Augmented Dickey-Fuller t    (panel ADF; left tail)
//
// With group_variants = true the between-dimension (group-mean) rho, t and
// ADF statistics are reported instead. Reported p-values are two-sided
// normal; the canonical one-sided rejection region is carried in each
// statistic's tail field.
CointReport pedroni_test(const Panel& panel, const CointSpec& spec,
                         bool group_variants = false);

namespace detail {

// Per-entity ingredients of the Pedroni statistics, all scaled free of T:
//   num     = T^{-1} [sum e_{t-1} de_t - (T-1) lambda_i] / L11^2
//   den     = T^{-2} sum e_{t-1}^2 / L11^2
//   st      = sigma_i^2 / L11^2
// and the parametric (ADF-based) analogues num_adf, den_adf, st_adf where
// the residuals are projected off the lagged differences first. L11^2 is
// the Bartlett long-run variance of the residuals of the differenced
// regression dy on dx. Shared by pedroni_test and the limit-moment
// simulator so both use identical constructions.
struct PedroniUnit {
  double num = 0.0, den = 0.0, st = 0.0;
  double num_adf = 0.0, den_adf = 0.0, st_adf = 0.0;
};
PedroniUnit pedroni_unit(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                         bool trend, int bandwidth, int aug_lags);

}  // namespace detail

}  // namespace panelkit
