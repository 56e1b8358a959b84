#include "panelkit/fmols.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "panelkit/errors.hpp"
#include "panelkit/lrv.hpp"
#include "panelkit/regression.hpp"

namespace panelkit {

FmolsEntityFit fmols_entity(const Eigen::VectorXd& y,
                            const Eigen::MatrixXd& X,
                            const FmolsOptions& opts) {
  const Eigen::Index T = y.size();
  const int k = static_cast<int>(X.cols());
  if (k < 1) throw InvalidParametersError("fmols_entity: no regressors");
  if (X.rows() != T) throw InvalidParametersError("fmols_entity: size");
  if (T <= k + opts.bandwidth + 2)
    throw TooFewPeriodsError("fmols_entity: T too small");

  // Estimation sample t = 2..T; the first row feeds the differences only.
  const Eigen::Index n = T - 1;
  const Eigen::MatrixXd Xs = X.bottomRows(n);
  const Eigen::VectorXd ys = y.tail(n);
  Eigen::MatrixXd dX(n, k);
  for (int j = 0; j < k; ++j)
    dX.col(j) = X.col(j).tail(n) - X.col(j).head(n);

  const Eigen::MatrixXd xtx = Xs.transpose() * Xs;
  auto xtx_ldlt = spd_factor(xtx, "fmols_entity");
  const Eigen::VectorXd beta_ols = xtx_ldlt.solve(Xs.transpose() * ys);
  const Eigen::VectorXd u = ys - Xs * beta_ols;

  Eigen::MatrixXd w(n, 1 + k);
  w.col(0) = u;
  w.rightCols(k) = dX;
  const LrvEstimate est = long_run_variance(w, opts.bandwidth);
  const Eigen::MatrixXd omega = est.Omega;
  const Eigen::MatrixXd lam_plus = est.Sigma + est.Lambda;  // one-sided

  FmolsEntityFit fit;
  fit.omega = omega;

  Eigen::VectorXd y_plus = ys;
  Eigen::VectorXd delta_plus = Eigen::VectorXd::Zero(k);
  double cond = omega(0, 0);
  if (!opts.zero_corrections) {
    const Eigen::MatrixXd O22 = omega.bottomRightCorner(k, k);
    auto o22 = spd_factor(O22, "fmols_entity: dx long-run covariance");
    const Eigen::VectorXd h = o22.solve(omega.col(0).tail(k));
    y_plus -= dX * h;
    delta_plus = lam_plus.row(0).tail(k).transpose() -
                 lam_plus.bottomRightCorner(k, k).transpose() * h;
    cond = omega(0, 0) - omega.col(0).tail(k).dot(h);
  }
  fit.cond_lrv = std::max(cond, 0.0);
  fit.corrected_xy =
      Xs.transpose() * y_plus - static_cast<double>(n) * delta_plus;
  fit.xtx = xtx;
  fit.coefficients = xtx_ldlt.solve(fit.corrected_xy);
  fit.zero_residual_variance = fit.cond_lrv <= 1e-14 * omega.norm();

  const Eigen::MatrixXd xtx_inv =
      xtx_ldlt.solve(Eigen::MatrixXd::Identity(k, k));
  fit.t_stats.resize(k);
  for (int j = 0; j < k; ++j) {
    const double v = fit.cond_lrv * xtx_inv(j, j);
    if (v > 0.0)
      fit.t_stats(j) = fit.coefficients(j) / std::sqrt(v);
    else
      fit.t_stats(j) =
          fit.coefficients(j) == 0.0
              ? 0.0
              : std::copysign(std::numeric_limits<double>::infinity(),
                              fit.coefficients(j));
  }
  return fit;
}

FmolsReport fmols_panel(const Panel& panel, const CointSpec& spec,
                        FmolsMode mode, const FmolsOptions& opts) {
  const int N = panel.n_entities();
  const int T = panel.n_periods();
  const int k = static_cast<int>(spec.regressors.size());
  if (k < 1) throw InvalidParametersError("fmols_panel: no regressors");
  const int dep = panel.variable_index(spec.dependent);
  if (dep < 0) throw MissingVariableError("fmols_panel: unknown dependent");

  FmolsReport report;
  report.mode = mode;
  report.regressors = spec.regressors;
  report.bandwidth = opts.bandwidth;
  report.n_obs_used = N * (T - 1);

  Eigen::MatrixXd sum_xtx = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd sum_xy = Eigen::VectorXd::Zero(k);
  double sum_cond = 0.0;
  Eigen::VectorXd mean_beta = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd sum_t = Eigen::VectorXd::Zero(k);

  for (int e = 0; e < N; ++e) {
    Eigen::VectorXd y = panel.series(e, dep);
    Eigen::MatrixXd X = panel.entity_matrix(e, spec.regressors);
    demean(y);
    demean_columns(X);
    FmolsEntityFit fit = fmols_entity(y, X, opts);
    sum_xtx += fit.xtx;
    sum_xy += fit.corrected_xy;
    sum_cond += fit.cond_lrv;
    mean_beta += fit.coefficients;
    sum_t += fit.t_stats;
    report.per_entity.emplace_back(panel.entities()[e], std::move(fit));
  }

  if (mode == FmolsMode::Grouped) {
    report.coefficients = mean_beta / N;
    report.t_stats = sum_t / std::sqrt(static_cast<double>(N));
  } else {
    auto ldlt = spd_factor(sum_xtx, "fmols_panel");
    report.coefficients = ldlt.solve(sum_xy);
    const Eigen::MatrixXd inv =
        ldlt.solve(Eigen::MatrixXd::Identity(k, k));
    const double cond_bar = sum_cond / N;
    report.t_stats.resize(k);
    for (int j = 0; j < k; ++j) {
      const double v = cond_bar * inv(j, j);
      report.t_stats(j) =
          v > 0.0 ? report.coefficients(j) / std::sqrt(v)
                  : (report.coefficients(j) == 0.0
                         ? 0.0
                         : std::copysign(
                               std::numeric_limits<double>::infinity(),
                               report.coefficients(j)));
    }
  }
  return report;
}

}  // namespace panelkit
