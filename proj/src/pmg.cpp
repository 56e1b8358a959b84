#include "panelkit/pmg.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "panelkit/errors.hpp"
#include "panelkit/regression.hpp"

namespace panelkit {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct EntityData {
  Eigen::VectorXd dy;    // dependent differences, rows t = L+1..T
  Eigen::VectorXd ec_y;  // y_{t-1}
  Eigen::MatrixXd ec_x;  // x_{t-1}
  Eigen::MatrixXd W;     // intercept + lagged differences
  std::vector<std::string> w_names;
};

struct Profile {
  Eigen::VectorXd coef;  // [phi, gamma...]
  Eigen::VectorXd resid;
  double rss = 0.0;
  Eigen::MatrixXd ztz;
};

std::vector<EntityData> build_data(const Panel& panel,
                                   const std::string& dependent,
                                   const std::vector<std::string>& regressors,
                                   const ArdlOrder& order) {
  if (order.p < 1)
    throw InvalidParametersError("pmg: ARDL p must be >= 1");
  if (regressors.empty())
    throw InvalidParametersError("pmg: no regressors");
  const int dep = panel.variable_index(dependent);
  if (dep < 0) throw MissingVariableError("pmg: unknown dependent");
  const int k = static_cast<int>(regressors.size());
  const int T = panel.n_periods();

  int q_max = 1;
  int n_short = order.p - 1;
  for (const auto& r : regressors) {
    const int q = order.q_for(r);
    if (q < 0) throw InvalidParametersError("pmg: q must be >= 0");
    q_max = std::max(q_max, q);
    n_short += q;
  }
  const int L = std::max(order.p, q_max);
  const int n = T - L;
  const int params = 2 + n_short;  // phi + intercept + short-run terms
  if (n < 5 + params)
    throw TooFewPeriodsError(
        "pmg: effective T after lagging must be >= 5 + parameters per "
        "entity");

  std::vector<EntityData> data(panel.n_entities());
  for (int e = 0; e < panel.n_entities(); ++e) {
    const Eigen::VectorXd y = panel.series(e, dep);
    const Eigen::MatrixXd X = panel.entity_matrix(e, regressors);
    EntityData& d = data[e];
    d.dy = (y.tail(T - 1) - y.head(T - 1)).tail(n);
    d.ec_y = y.segment(L - 1, n);
    d.ec_x.resize(n, k);
    for (int j = 0; j < k; ++j) d.ec_x.col(j) = X.col(j).segment(L - 1, n);

    d.W.resize(n, 1 + n_short);
    d.W.col(0).setOnes();
    d.w_names.clear();
    int col = 1;
    const Eigen::VectorXd dy_full = y.tail(T - 1) - y.head(T - 1);
    for (int s = 1; s <= order.p - 1; ++s) {
      d.W.col(col++) = dy_full.segment(L - 1 - s, n);
      d.w_names.push_back("D(" + dependent + "(-" + std::to_string(s) + "))");
    }
    for (int j = 0; j < k; ++j) {
      const Eigen::VectorXd dx =
          X.col(j).tail(T - 1) - X.col(j).head(T - 1);
      for (int s = 0; s < order.q_for(regressors[j]); ++s) {
        d.W.col(col++) = dx.segment(L - 1 - s, n);
        d.w_names.push_back(
            s == 0 ? "D(" + regressors[j] + ")"
                   : "D(" + regressors[j] + "(-" + std::to_string(s) + "))");
      }
    }
  }
  return data;
}

Profile profile_entity(const EntityData& d, const Eigen::VectorXd& theta) {
  const Eigen::Index n = d.dy.size();
  const Eigen::Index w = d.W.cols();
  Eigen::MatrixXd Z(n, 1 + w);
  Z.col(0) = d.ec_y - d.ec_x * theta;
  Z.rightCols(w) = d.W;
  Profile p;
  p.ztz = Z.transpose() * Z;
  const auto ldlt = spd_factor(p.ztz, "pmg: entity ECM design");
  p.coef = ldlt.solve(Z.transpose() * d.dy);
  p.resid = d.dy - Z * p.coef;
  p.rss = p.resid.squaredNorm();
  return p;
}

double loglik_from(const std::vector<EntityData>& data,
                   const Eigen::VectorXd& theta) {
  double ll = 0.0;
  for (const auto& d : data) {
    const Profile p = profile_entity(d, theta);
    const double n = static_cast<double>(d.dy.size());
    ll += -0.5 * n * (std::log(kTwoPi * p.rss / n) + 1.0);
  }
  return ll;
}

// Envelope theorem at the profiled optimum:
//   dl/dtheta = - sum_i (phi_i / sigma_i^2) x_{t-1}' e_i
Eigen::VectorXd gradient_from(const std::vector<EntityData>& data,
                              const Eigen::VectorXd& theta) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(theta.size());
  for (const auto& d : data) {
    const Profile p = profile_entity(d, theta);
    const double n = static_cast<double>(d.dy.size());
    const double sigma2 = p.rss / n;
    g.noalias() -= (p.coef(0) / sigma2) * (d.ec_x.transpose() * p.resid);
  }
  return g;
}

Eigen::MatrixXd fd_hessian(const std::vector<EntityData>& data,
                           const Eigen::VectorXd& theta) {
  const Eigen::Index k = theta.size();
  Eigen::MatrixXd H(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double h = 1e-5 * (1.0 + std::fabs(theta(j)));
    Eigen::VectorXd tp = theta, tm = theta;
    tp(j) += h;
    tm(j) -= h;
    H.col(j) = (gradient_from(data, tp) - gradient_from(data, tm)) /
               (2.0 * h);
  }
  return 0.5 * (H + H.transpose());
}

Eigen::VectorXd pooled_within_ols(const Panel& panel,
                                  const std::string& dependent,
                                  const std::vector<std::string>& regressors) {
  const int k = static_cast<int>(regressors.size());
  Eigen::MatrixXd sxx = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd sxy = Eigen::VectorXd::Zero(k);
  const int dep = panel.variable_index(dependent);
  for (int e = 0; e < panel.n_entities(); ++e) {
    Eigen::VectorXd y = panel.series(e, dep);
    Eigen::MatrixXd X = panel.entity_matrix(e, regressors);
    demean(y);
    demean_columns(X);
    sxx.noalias() += X.transpose() * X;
    sxy.noalias() += X.transpose() * y;
  }
  return spd_factor(sxx, "pmg: pooled levels regression").solve(sxy);
}

}  // namespace

double pmg_loglik(const Eigen::VectorXd& theta, const Panel& panel,
                  const std::string& dependent,
                  const std::vector<std::string>& regressors,
                  const ArdlOrder& order) {
  return loglik_from(build_data(panel, dependent, regressors, order), theta);
}

Eigen::VectorXd pmg_loglik_gradient(const Eigen::VectorXd& theta,
                                    const Panel& panel,
                                    const std::string& dependent,
                                    const std::vector<std::string>& regressors,
                                    const ArdlOrder& order) {
  return gradient_from(build_data(panel, dependent, regressors, order),
                       theta);
}

PmgFit pmg_fit(const Panel& panel, const std::string& dependent,
               const std::vector<std::string>& regressors,
               const ArdlOrder& order) {
  const auto data = build_data(panel, dependent, regressors, order);
  const Eigen::Index k = static_cast<Eigen::Index>(regressors.size());

  PmgFit fit;
  fit.regressors = regressors;
  fit.t_used = static_cast<int>(data.front().dy.size());

  Eigen::VectorXd theta = pooled_within_ols(panel, dependent, regressors);
  double ll = loglik_from(data, theta);
  fit.loglik_path.push_back(ll);

  int it = 0;
  bool step_converged = false;
  for (; it < 200; ++it) {
    const Eigen::VectorXd g = gradient_from(data, theta);
    const Eigen::MatrixXd H = fd_hessian(data, theta);

    Eigen::VectorXd dir;
    Eigen::LDLT<Eigen::MatrixXd> negH(-H);
    if (negH.info() == Eigen::Success && negH.isPositive())
      dir = negH.solve(g);
    else
      dir = g;  // fall back to steepest ascent away from concavity
    if (dir.dot(g) <= 0.0) dir = g;

    // Step-halving guarantees the likelihood path never decreases.
    double lambda = 1.0;
    double ll_new = ll;
    Eigen::VectorXd theta_new = theta;
    bool improved = false;
    while (lambda > 1e-14) {
      const Eigen::VectorXd cand = theta + lambda * dir;
      const double ll_cand = loglik_from(data, cand);
      if (std::isfinite(ll_cand) && ll_cand >= ll) {
        theta_new = cand;
        ll_new = ll_cand;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) break;

    const double step = (theta_new - theta).cwiseAbs().maxCoeff();
    theta = theta_new;
    ll = ll_new;
    fit.loglik_path.push_back(ll);
    if (step < 1e-8) {
      step_converged = true;
      ++it;
      break;
    }
  }

  fit.theta = theta;
  fit.loglik = ll;
  fit.iterations = it;
  const Eigen::VectorXd g_final = gradient_from(data, theta);
  fit.grad_norm = g_final.cwiseAbs().maxCoeff();
  fit.converged =
      step_converged && fit.grad_norm < 1e-4 * (1.0 + std::fabs(ll));

  // z statistics for theta from the observed information of the
  // concentrated likelihood.
  const Eigen::MatrixXd H = fd_hessian(data, theta);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(k, k);
  Eigen::LDLT<Eigen::MatrixXd> negH(-H);
  if (negH.info() == Eigen::Success && negH.isPositive())
    cov = negH.solve(Eigen::MatrixXd::Identity(k, k));
  fit.theta_z.resize(k);
  for (Eigen::Index j = 0; j < k; ++j)
    fit.theta_z(j) =
        cov(j, j) > 0.0 ? theta(j) / std::sqrt(cov(j, j)) : 0.0;

  // Per-entity coefficients and conventional ML standard errors at theta.
  for (int e = 0; e < panel.n_entities(); ++e) {
    const Profile p = profile_entity(data[e], theta);
    const double n = static_cast<double>(data[e].dy.size());
    const double sigma2 = p.rss / n;
    const Eigen::MatrixXd cov_e =
        sigma2 * spd_factor(p.ztz, "pmg").solve(Eigen::MatrixXd::Identity(
                     p.ztz.rows(), p.ztz.cols()));
    PmgEntityFit ef;
    ef.entity = panel.entities()[e];
    ef.phi = p.coef(0);
    ef.phi_z = cov_e(0, 0) > 0.0 ? ef.phi / std::sqrt(cov_e(0, 0)) : 0.0;
    ef.intercept = p.coef(1);
    ef.intercept_z =
        cov_e(1, 1) > 0.0 ? ef.intercept / std::sqrt(cov_e(1, 1)) : 0.0;
    const Eigen::Index ns = p.coef.size() - 2;
    ef.short_run = p.coef.tail(ns);
    ef.short_run_z.resize(ns);
    for (Eigen::Index j = 0; j < ns; ++j)
      ef.short_run_z(j) =
          cov_e(2 + j, 2 + j) > 0.0
              ? ef.short_run(j) / std::sqrt(cov_e(2 + j, 2 + j))
              : 0.0;
    ef.short_run_names = data[e].w_names;
    ef.sigma2 = sigma2;
    ef.non_stationary_adjustment = !(ef.phi > -2.0 && ef.phi <= 0.0);
    fit.entities.push_back(std::move(ef));
  }
  return fit;
}

}  // namespace panelkit
