#include "panelkit/adf.hpp"

#include <string>

#include "panelkit/errors.hpp"
#include "panelkit/panel.hpp"
#include "panelkit/regression.hpp"

namespace panelkit {

AdfResult adf_test(const Eigen::VectorXd& series, int aug_lags,
                   Deterministic det) {
  if (aug_lags < 0)
    throw InvalidParametersError("adf_test: aug_lags must be >= 0");
  const int det_terms = det == Deterministic::None ? 0
                        : det == Deterministic::Intercept ? 1 : 2;
  const Eigen::Index T = series.size();
  if (T <= aug_lags + 3 + det_terms)
    throw SequenceTooShortError("adf_test: series too short for " +
                                std::to_string(aug_lags) + " lags");

  // Rows t = aug_lags+2 .. T (1-based); n = T - 1 - aug_lags of them.
  const Eigen::Index n = T - 1 - aug_lags;
  Eigen::VectorXd dx = diff(series, 1);
  Eigen::VectorXd y = dx.tail(n);

  const int k = 1 + aug_lags + (det == Deterministic::InterceptTrend ? 1 : 0);
  Eigen::MatrixXd X(n, k);
  X.col(0) = series.segment(aug_lags, n);  // x_{t-1}
  for (int j = 1; j <= aug_lags; ++j)
    X.col(j) = dx.segment(aug_lags - j, n);  // dx_{t-j}
  if (det == Deterministic::InterceptTrend)
    X.col(k - 1) = Eigen::VectorXd::LinSpaced(n, 1.0, static_cast<double>(n));

  RegressionFit fit = ols(y, X, det != Deterministic::None);
  const int level_col = det == Deterministic::None ? 0 : 1;

  AdfResult res;
  res.statistic = fit.t_stats(level_col);
  res.aug_lags = aug_lags;
  res.deterministic = det;
  res.rho = 1.0 + fit.coefficients(level_col);
  res.n_used = static_cast<int>(n);
  return res;
}

double adf_critical_value(Deterministic det, double level) {
  // MacKinnon asymptotic critical values at 1%, 5%, 10%.
  static const double none_cv[3] = {-2.5658, -1.9410, -1.6168};
  static const double mean_cv[3] = {-3.4304, -2.8615, -2.5668};
  static const double trend_cv[3] = {-3.9588, -3.4105, -3.1271};
  int i;
  if (level <= 0.015)
    i = 0;
  else if (level <= 0.075)
    i = 1;
  else
    i = 2;
  const double* cv = det == Deterministic::None ? none_cv
                     : det == Deterministic::Intercept ? mean_cv : trend_cv;
  return cv[i];
}

}  // namespace panelkit
