#include "panelkit/kao.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "panelkit/errors.hpp"
#include "panelkit/lrv.hpp"
#include "panelkit/regression.hpp"
#include "panelkit/stats.hpp"

namespace panelkit {

CointReport kao_test(const Panel& panel, const CointSpec& spec) {
  if (spec.homogeneity != VectorHomogeneity::SameForAll)
    throw InvalidParametersError(
        "kao_test: cointegrating vector must be the same for all panels");
  if (spec.deterministic != CointDeterministic::Means)
    throw InvalidParametersError("kao_test: only panel means are supported");
  if (spec.regressors.empty())
    throw InvalidParametersError("kao_test: no regressors");
  if (spec.bandwidth < 0) throw NegativeBandwidthError("kao_test: bandwidth");
  if (spec.aug_lags < 0)
    throw InvalidParametersError("kao_test: aug_lags must be >= 0");

  const int N = panel.n_entities();
  const int T = panel.n_periods();
  const int k = static_cast<int>(spec.regressors.size());
  if (T - 1 - spec.aug_lags < 8)
    throw TooFewPeriodsError("kao_test: effective T after lagging < 8");

  // First stage: pooled within regression with a common slope vector.
  std::vector<Eigen::VectorXd> y_e(N);
  std::vector<Eigen::MatrixXd> x_e(N);
  Eigen::MatrixXd sxx = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd sxy = Eigen::VectorXd::Zero(k);
  for (int e = 0; e < N; ++e) {
    Eigen::VectorXd y = panel.series(e, panel.variable_index(spec.dependent));
    Eigen::MatrixXd X = panel.entity_matrix(e, spec.regressors);
    if (panel.variable_index(spec.dependent) < 0)
      throw MissingVariableError("kao_test: unknown dependent");
    demean(y);
    demean_columns(X);
    sxx.noalias() += X.transpose() * X;
    sxy.noalias() += X.transpose() * y;
    y_e[e] = std::move(y);
    x_e[e] = std::move(X);
  }
  const Eigen::VectorXd beta =
      spd_factor(sxx, "kao_test").solve(sxy);

  // Pooled DF regression on the residuals: e_t = rho e_{t-1} + v_t.
  double A = 0.0, B = 0.0;
  std::vector<Eigen::VectorXd> resid(N);
  for (int e = 0; e < N; ++e) {
    resid[e] = y_e[e] - x_e[e] * beta;
    const auto& r = resid[e];
    A += r.tail(T - 1).dot(r.head(T - 1));
    B += r.head(T - 1).squaredNorm();
  }
  const double rho = A / B;
  double rss_v = 0.0;
  for (int e = 0; e < N; ++e) {
    const auto& r = resid[e];
    rss_v += (r.tail(T - 1) - rho * r.head(T - 1)).squaredNorm();
  }
  const double s_v = std::sqrt(rss_v / (static_cast<double>(N) * T));
  const double t_rho = (rho - 1.0) * std::sqrt(B) / s_v;

  // Pooled augmented regression: de_t on e_{t-1} and aug_lags lagged diffs.
  const int p = spec.aug_lags;
  const int n_adf = T - 1 - p;
  Eigen::VectorXd dy_all(static_cast<Eigen::Index>(N) * n_adf);
  Eigen::MatrixXd X_adf(static_cast<Eigen::Index>(N) * n_adf, 1 + p);
  for (int e = 0; e < N; ++e) {
    const auto& r = resid[e];
    Eigen::VectorXd dr = diff(r, 1);
    dy_all.segment(e * n_adf, n_adf) = dr.tail(n_adf);
    X_adf.block(e * n_adf, 0, n_adf, 1) = r.segment(p, n_adf);
    for (int j = 1; j <= p; ++j)
      X_adf.block(e * n_adf, j, n_adf, 1) = dr.segment(p - j, n_adf);
  }
  const RegressionFit adf_fit = ols(dy_all, X_adf, false);
  const double t_adf = adf_fit.t_stats(0);

  // Conditional variance pieces from w_it = (de_it, dx_it'), per entity,
  // averaged across entities.
  Eigen::MatrixXd Sig = Eigen::MatrixXd::Zero(1 + k, 1 + k);
  Eigen::MatrixXd Omg = Eigen::MatrixXd::Zero(1 + k, 1 + k);
  for (int e = 0; e < N; ++e) {
    Eigen::MatrixXd w(T - 1, 1 + k);
    w.col(0) = diff(resid[e], 1);
    for (int j = 0; j < k; ++j)
      w.col(1 + j) = diff(Eigen::VectorXd(x_e[e].col(j)), 1);
    LrvEstimate est = long_run_variance(w, spec.bandwidth, /*demean=*/true);
    Sig += est.Sigma;
    Omg += est.Omega;
  }
  Sig /= N;
  Omg /= N;
  auto schur = [&](const Eigen::MatrixXd& M) {
    const Eigen::MatrixXd M22 = M.bottomRightCorner(k, k);
    const Eigen::VectorXd M21 = M.col(0).tail(k);
    const double c =
        M(0, 0) - M21.dot(spd_factor(M22, "kao_test").solve(M21));
    return std::max(c, 1e-300);
  };
  const double sv2 = schur(Sig);
  const double s0v2 = schur(Omg);
  const double ratio = sv2 / s0v2;

  const double sN = std::sqrt(static_cast<double>(N));
  const double Td = static_cast<double>(T);
  const double dfrho_u = (sN * Td * (rho - 1.0) + 3.0 * sN) / std::sqrt(10.2);
  const double dft_u = std::sqrt(1.25) * t_rho + std::sqrt(1.875 * N);
  const double dfrho_a = (sN * Td * (rho - 1.0) + 3.0 * sN * ratio) /
                         std::sqrt(3.0 + 36.0 * ratio * ratio / 5.0);
  const double shift = std::sqrt(6.0 * N) * std::sqrt(sv2) /
                       (2.0 * std::sqrt(s0v2));
  const double denom_t =
      std::sqrt(s0v2 / (2.0 * sv2) + 3.0 * sv2 / (10.0 * s0v2));
  const double dft_a = (t_rho + shift) / denom_t;
  const double adf = (t_adf + shift) / denom_t;

  CointReport report;
  report.test_family = "Kao";
  report.n_panels = N;
  report.n_periods_used = T - 1 - p;
  report.spec = spec;
  report.single_entity_warning = (N == 1);
  auto push = [&](const std::string& name, double value) {
    report.statistics.push_back(
        {name, value, normal_cdf(value), Tail::Left});
  };
  push("Modified Dickey-Fuller t", dfrho_a);
  push("Dickey-Fuller t", dft_a);
  push("Augmented Dickey-Fuller t", adf);
  push("Unadjusted modified Dickey-Fuller t", dfrho_u);
  push("Unadjusted Dickey-Fuller t", dft_u);
  return report;
}

}  // namespace panelkit
