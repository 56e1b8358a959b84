#include "panelkit/dh.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "panelkit/errors.hpp"
#include "panelkit/regression.hpp"
#include "panelkit/stats.hpp"

namespace panelkit {

WaldResult individual_wald(const Eigen::VectorXd& effect,
                           const Eigen::VectorXd& cause, int K) {
  if (K < 1) throw InvalidParametersError("individual_wald: K must be >= 1");
  if (effect.size() != cause.size())
    throw InvalidParametersError("individual_wald: length mismatch");
  const Eigen::Index T = effect.size();
  const Eigen::Index n = T - K;
  if (n - 2 * K - 1 <= K)
    throw SequenceTooShortError(
        "individual_wald: need T - 2K - 1 > K post-lag observations");

  WaldResult res;
  res.t_used = static_cast<int>(n);

  Eigen::VectorXd y = effect.tail(n);
  Eigen::MatrixXd X(n, 2 * K);
  for (int j = 1; j <= K; ++j) {
    X.col(j - 1) = effect.segment(K - j, n);
    X.col(K + j - 1) = cause.segment(K - j, n);
  }

  // Drop cause columns without variation; if none are left the null is
  // untestable and the statistic is 0 by convention.
  std::vector<int> cause_cols;
  for (int j = 0; j < K; ++j) {
    const Eigen::VectorXd c = X.col(K + j);
    if ((c.array() - c.mean()).abs().maxCoeff() > 1e-12)
      cause_cols.push_back(K + j);
  }
  if (cause_cols.empty()) {
    res.degenerate = true;
    res.wald = 0.0;
    return res;
  }
  if (static_cast<int>(cause_cols.size()) < K) res.degenerate = true;

  Eigen::MatrixXd Xk(n, K + cause_cols.size());
  Xk.leftCols(K) = X.leftCols(K);
  for (size_t j = 0; j < cause_cols.size(); ++j)
    Xk.col(K + j) = X.col(cause_cols[j]);

  const RegressionFit fit = ols(y, Xk, /*intercept=*/true);
  const int q = static_cast<int>(cause_cols.size());
  const int off = 1 + K;  // intercept + own lags
  const Eigen::VectorXd b = fit.coefficients.segment(off, q);
  const Eigen::MatrixXd V =
      fit.s2() * fit.xtx_inverse.block(off, off, q, q);
  res.wald = b.dot(spd_factor(V, "individual_wald").solve(b));
  return res;
}

DhAggregates dh_aggregates(const std::vector<double>& walds, int K,
                           int t_used) {
  if (walds.empty()) throw EmptySequenceError("dh_aggregates: no panels");
  const double N = static_cast<double>(walds.size());
  const double Kd = K;
  const double T = t_used;
  DhAggregates agg;
  double sum = 0.0;
  for (double w : walds) sum += w;
  agg.w_bar = sum / N;
  agg.z_bar = std::sqrt(N / (2.0 * Kd)) * (agg.w_bar - Kd);
  if (T > 2.0 * Kd + 5.0) {
    agg.z_bar_tilde = std::sqrt(N / (2.0 * Kd)) *
                      std::sqrt((T - 2.0 * Kd - 5.0) / (T - Kd - 3.0)) *
                      ((T - 2.0 * Kd - 3.0) / (T - 2.0 * Kd - 1.0) *
                           agg.w_bar -
                       Kd);
  } else {
    agg.z_bar_tilde = std::numeric_limits<double>::quiet_NaN();
  }
  return agg;
}

DhReport dh_test(const Panel& panel, const std::string& cause,
                 const std::string& effect, int K) {
  const int vc = panel.variable_index(cause);
  const int ve = panel.variable_index(effect);
  if (vc < 0) throw MissingVariableError("dh_test: unknown cause variable");
  if (ve < 0) throw MissingVariableError("dh_test: unknown effect variable");

  DhReport report;
  report.cause = cause;
  report.effect = effect;
  report.lag_order = K;
  report.n_panels = panel.n_entities();
  for (int e = 0; e < panel.n_entities(); ++e) {
    const WaldResult w =
        individual_wald(panel.series(e, ve), panel.series(e, vc), K);
    report.wald_individual.push_back(w.wald);
    report.any_degenerate = report.any_degenerate || w.degenerate;
    report.t_used = w.t_used;
  }
  const DhAggregates agg =
      dh_aggregates(report.wald_individual, K, report.t_used);
  report.w_bar = agg.w_bar;
  report.z_bar = agg.z_bar;
  report.z_bar_tilde = agg.z_bar_tilde;
  report.p_z_bar = normal_p_two_sided(agg.z_bar);
  report.p_z_bar_tilde = std::isnan(agg.z_bar_tilde)
                             ? std::numeric_limits<double>::quiet_NaN()
                             : normal_p_two_sided(agg.z_bar_tilde);
  return report;
}

}  // namespace panelkit
