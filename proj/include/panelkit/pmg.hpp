#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {

// ARDL order: p lags of the dependent, q_j lags of each regressor.
struct ArdlOrder {
  int p = 2;
  std::map<std::string, int> q;  // per-regressor overrides
  int q_default = 1;

  int q_for(const std::string& name) const {
    auto it = q.find(name);
    return it == q.end() ? q_default : it->second;
  }
};

struct PmgEntityFit {
  std::string entity;
  double phi = 0.0;    // error-correction speed (COINTEQ coefficient)
  double phi_z = 0.0;
  double intercept = 0.0;
  double intercept_z = 0.0;
  Eigen::VectorXd short_run;  // coefficients on the lagged differences
  Eigen::VectorXd short_run_z;
  std::vector<std::string> short_run_names;
  double sigma2 = 0.0;  // ML residual variance, rss / n
  bool non_stationary_adjustment = false;  // phi outside (-2, 0]
};

struct PmgFit {
  Eigen::VectorXd theta;    // homogeneous long-run coefficients
  Eigen::VectorXd theta_z;  // from the inverse information at the optimum
  std::vector<std::string> regressors;
  std::vector<PmgEntityFit> entities;
  double loglik = 0.0;
  int iterations = 0;
  bool converged = false;
  double grad_norm = 0.0;
  std::vector<double> loglik_path;  // non-decreasing by construction
  int t_used = 0;                   // post-lag observations per entity
};

// Pooled Mean Group estimator: common long-run vector theta, heterogeneous
// short-run dynamics, fit by maximizing the concentrated log-likelihood
//
//   l(theta) = -1/2 sum_i n_i (ln(2 pi rss_i(theta)/n_i) + 1)
//
// where rss_i(theta) is the residual sum of squares of the entity ECM
//
//   dy_t = phi_i (y_{t-1} - theta' x_{t-1}) + lagged differences + c_i + e_t
//
// profiled by per-entity least squares. Newton iteration with step-halving
// (the recorded likelihood path never decreases), starting from the pooled
// within OLS of the static levels regression; stops when the step falls
// below 1e-8 or after 200 iterations.
PmgFit pmg_fit(const Panel& panel, const std::string& dependent,
               const std::vector<std::string>& regressors,
               const ArdlOrder& order);

// Concentrated log-likelihood and its analytic gradient at theta, exposed
// for testing the optimizer.
double pmg_loglik(const Eigen::VectorXd& theta, const Panel& panel,
                  const std::string& dependent,
                  const std::vector<std::string>& regressors,
                  const ArdlOrder& order);
Eigen::VectorXd pmg_loglik_gradient(const Eigen::VectorXd& theta,
                                    const Panel& panel,
                                    const std::string& dependent,
                                    const std::vector<std::string>& regressors,
                                    const ArdlOrder& order);

}  // namespace panelkit
