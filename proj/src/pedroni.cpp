#include "panelkit/pedroni.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "panelkit/errors.hpp"
#include "panelkit/lrv.hpp"
#include "panelkit/regression.hpp"
#include "panelkit/stats.hpp"

namespace panelkit {
namespace detail {

PedroniUnit pedroni_unit(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                         bool trend, int bandwidth, int aug_lags) {
  const Eigen::Index T = y.size();
  const int m = static_cast<int>(X.cols());
  const int det_terms = trend ? 2 : 1;
  if (T - 1 - aug_lags < m + det_terms + 3)
    throw TooFewPeriodsError("pedroni: entity series too short");

  // First stage: y on [1, (t), X] per entity.
  Eigen::MatrixXd D(T, m + (trend ? 1 : 0));
  if (trend)
    D.col(0) = Eigen::VectorXd::LinSpaced(T, 1.0, static_cast<double>(T));
  if (m > 0) D.rightCols(m) = X;
  const Eigen::VectorXd e = ols(y, D, /*intercept=*/true).residuals;

  // Differenced regression dy on dx gives the residuals whose long-run
  // variance is L11^2; the trend case carries an intercept (drift).
  Eigen::VectorXd dy = diff(y, 1);
  Eigen::VectorXd eta;
  if (m > 0) {
    Eigen::MatrixXd dX(T - 1, m);
    for (int j = 0; j < m; ++j)
      dX.col(j) = diff(Eigen::VectorXd(X.col(j)), 1);
    eta = ols(dy, dX, /*intercept=*/trend).residuals;
  } else if (trend) {
    eta = dy.array() - dy.mean();
  } else {
    eta = dy;
  }
  const double L11 = std::max(
      long_run_variance(eta, bandwidth).omega2(), 1e-300);

  const double Td = static_cast<double>(T);
  PedroniUnit u;

  // Nonparametric pieces from e_t = rho e_{t-1} + u_t.
  {
    const Eigen::VectorXd e0 = e.head(T - 1), e1 = e.tail(T - 1);
    const double rho = e1.dot(e0) / e0.squaredNorm();
    const Eigen::VectorXd ures = e1 - rho * e0;
    const double s2 = ures.squaredNorm() / Td;
    double lam = 0.0;
    const Eigen::Index n = ures.size();
    for (int s = 1; s <= bandwidth && s < n; ++s) {
      const double w = 1.0 - static_cast<double>(s) / (bandwidth + 1);
      lam += w * ures.tail(n - s).dot(ures.head(n - s)) / Td;
    }
    const double sigma2 = s2 + 2.0 * lam;
    const double sum_e_de = e0.dot(e1 - e0);
    u.num = ((sum_e_de - (Td - 1.0) * lam) / Td) / L11;
    u.den = (e0.squaredNorm() / (Td * Td)) / L11;
    u.st = sigma2 / L11;
  }

  // Parametric pieces: project e_{t-1} and de_t off the lagged differences.
  {
    const int p = aug_lags;
    const Eigen::Index n = T - 1 - p;
    Eigen::VectorXd de = diff(e, 1);
    Eigen::VectorXd dep = de.tail(n);
    Eigen::VectorXd lev = e.segment(p, n);
    if (p > 0) {
      Eigen::MatrixXd Z(n, p);
      for (int j = 1; j <= p; ++j) Z.col(j - 1) = de.segment(p - j, n);
      // Frisch-Waugh residuals; fall back to the raw series when the lag
      // block is degenerate (e.g. constant residuals).
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Z);
      qr.setThreshold(1e-10);
      if (qr.rank() == p) {
        dep -= Z * qr.solve(dep);
        lev -= Z * qr.solve(e.segment(p, n).eval());
      }
    }
    const double gamma = lev.dot(dep) / lev.squaredNorm();
    const double s2_adf = (dep - gamma * lev).squaredNorm() / Td;
    u.num_adf = (lev.dot(dep) / Td) / L11;
    u.den_adf = (lev.squaredNorm() / (Td * Td)) / L11;
    u.st_adf = s2_adf / L11;
  }
  return u;
}

}  // namespace detail

CointReport pedroni_test(const Panel& panel, const CointSpec& spec,
                         bool group_variants) {
  if (spec.homogeneity != VectorHomogeneity::PanelSpecific)
    throw InvalidParametersError(
        "pedroni_test: cointegrating vector must be panel specific");
  if (spec.regressors.empty())
    throw InvalidParametersError("pedroni_test: no regressors");
  if (spec.bandwidth < 0)
    throw NegativeBandwidthError("pedroni_test: bandwidth");
  const int N = panel.n_entities();
  if (N < 2)
    throw SingleEntityError("pedroni_test: needs at least 2 entities");
  const int T = panel.n_periods();
  if (T - 1 - spec.aug_lags < 8)
    throw TooFewPeriodsError("pedroni_test: effective T after lagging < 8");
  const int m = static_cast<int>(spec.regressors.size());
  if (m > 7)
    throw InvalidParametersError(
        "pedroni_test: standardization moments tabulated for up to 7 "
        "regressors");

  const bool trend =
      spec.deterministic == CointDeterministic::MeansAndTrends;
  const int dep = panel.variable_index(spec.dependent);
  if (dep < 0) throw MissingVariableError("pedroni_test: unknown dependent");

  double Snum = 0, Sden = 0, Sst = 0, SnumA = 0, SdenA = 0, SstA = 0;
  double Sgrho = 0, Sgt = 0, SgA = 0;
  for (int e = 0; e < N; ++e) {
    const Eigen::VectorXd y = panel.series(e, dep);
    const Eigen::MatrixXd X = panel.entity_matrix(e, spec.regressors);
    const auto u =
        detail::pedroni_unit(y, X, trend, spec.bandwidth, spec.aug_lags);
    Snum += u.num;
    Sden += u.den;
    Sst += u.st;
    SnumA += u.num_adf;
    SdenA += u.den_adf;
    SstA += u.st_adf;
    Sgrho += u.num / u.den;
    Sgt += u.num / std::sqrt(u.st * u.den);
    SgA += u.num_adf / std::sqrt(u.st_adf * u.den_adf);
  }

  const double sN = std::sqrt(static_cast<double>(N));
  const auto det = spec.deterministic;
  auto standardize = [&](double raw, PedroniStat s) {
    const LimitMoments mom = pedroni_moments(det, m, s);
    return (raw - mom.mu * sN) / std::sqrt(mom.nu);
  };

  CointReport report;
  report.test_family = "Pedroni";
  report.n_panels = N;
  report.n_periods_used = T - 1;
  report.spec = spec;
  report.group_variants = group_variants;
  auto push = [&](const std::string& name, double z, Tail tail) {
    report.statistics.push_back({name, z, normal_p_two_sided(z), tail});
  };

  if (!group_variants) {
    const double v_raw = N * sN / Sden;
    const double rho_raw = sN * Snum / Sden;
    const double t_raw = Snum / std::sqrt((Sst / N) * Sden);
    const double adf_raw = SnumA / std::sqrt((SstA / N) * SdenA);
    push("Modified variance ratio", standardize(v_raw, PedroniStat::PanelV),
         Tail::Right);
    push("Modified Phillips-Perron t",
         standardize(rho_raw, PedroniStat::PanelRho), Tail::Left);
    push("Phillips-Perron t", standardize(t_raw, PedroniStat::PanelT),
         Tail::Left);
    push("Augmented Dickey-Fuller t",
         standardize(adf_raw, PedroniStat::PanelT), Tail::Left);
  } else {
    push("Group rho-statistic",
         standardize(Sgrho / sN, PedroniStat::GroupRho), Tail::Left);
    push("Group t-statistic", standardize(Sgt / sN, PedroniStat::GroupT),
         Tail::Left);
    push("Group ADF-statistic", standardize(SgA / sN, PedroniStat::GroupT),
         Tail::Left);
  }
  return report;
}

}  // namespace panelkit
