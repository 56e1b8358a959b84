#pragma once

#include <Eigen/Core>

namespace panelkit {

enum class Deterministic { None, Intercept, InterceptTrend };

struct AdfResult {
  double statistic = 0.0;  // t-ratio on the lagged level
  int aug_lags = 0;
  Deterministic deterministic = Deterministic::Intercept;
  double rho = 0.0;  // implied AR(1) coefficient, 1 + slope on the level
  int n_used = 0;    // observations in the test regression
};

// Augmented Dickey-Fuller regression: regress dx_t on x_{t-1}, the chosen
// deterministic terms and aug_lags lagged differences; the statistic is the
// t-ratio on x_{t-1}.
AdfResult adf_test(const Eigen::VectorXd& series, int aug_lags,
                   Deterministic det = Deterministic::Intercept);

// Asymptotic Dickey-Fuller critical value (MacKinnon), level in
// {0.01, 0.05, 0.10}. Rejection region is the left tail.
double adf_critical_value(Deterministic det, double level);

}  // namespace panelkit
