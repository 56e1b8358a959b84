#pragma once

#include "panelkit/coint.hpp"

namespace panelkit {

// Kao residual-based panel cointegration test with a homogeneous
// cointegrating vector. First stage pools the within-demeaned regression of
// the dependent on the regressors with a common slope vector; the second
// stage applies Dickey-Fuller style statistics to the pooled residuals:
//
//   rho_hat = sum e_t e_{t-1} / sum e_{t-1}^2        (pooled over panels)
//   DF_rho  = (sqrt(N) T (rho-1) + 3 sqrt(N)) / sqrt(10.2)
//   DF_t    = sqrt(1.25) t_rho + sqrt(1.875 N)
//   DF*_rho = (sqrt(N) T (rho-1) + 3 sqrt(N) r) / sqrt(3 + 36 r^2 / 5)
//   DF*_t   = (t_rho + sqrt(6N) sv/(2 s0v)) / sqrt(s0v^2/(2 sv^2) + 3 sv^2/(10 s0v^2))
//   ADF     = same as DF*_t with t_rho replaced by the pooled augmented t
//
// where r = sv^2/s0v^2 and sv^2 (s0v^2) is the conditional contemporaneous
// (long-run, Bartlett kernel) variance of the residual innovations given the
// regressor innovations (Kao 1999). All five are standard normal under the
// null of no cointegration; rejection is in the left tail and the reported
// p-values are left-tailed.
//
// Statistic labels follow the common software naming: the "modified"
// statistics are the coefficient-based DF_rho forms, the "unadjusted" ones
// omit the endogeneity correction.
CointReport kao_test(const Panel& panel, const CointSpec& spec);

}  // namespace panelkit
