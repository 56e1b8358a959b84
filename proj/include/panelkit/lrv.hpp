#pragma once

#include <Eigen/Core>
#include <string>

namespace panelkit {

// Bartlett-kernel long-run (co)variance estimate of a stationary series.
// With autocovariances G_j = T^{-1} sum_t u_t u_{t-j}' and weights
// w_j = 1 - j/(L+1):
//   Sigma  = G_0
//   Lambda = sum_{j=1..L} w_j G_j           (one-sided, j >= 1)
//   Omega  = Sigma + Lambda + Lambda'
// The 1/T convention keeps Omega positive semidefinite.
struct LrvEstimate {
  Eigen::MatrixXd Sigma;
  Eigen::MatrixXd Lambda;
  Eigen::MatrixXd Omega;
  int bandwidth = 0;
  std::string kernel = "bartlett";

  // Scalar views (valid when the series is univariate).
  double sigma2() const { return Sigma(0, 0); }
  double lambda() const { return Lambda(0, 0); }
  double omega2() const { return Omega(0, 0); }
};

// u holds one observation per row. demean subtracts column means first.
LrvEstimate long_run_variance(const Eigen::MatrixXd& u, int bandwidth,
                              bool demean = false);
LrvEstimate long_run_variance(const Eigen::VectorXd& u, int bandwidth,
                              bool demean = false);

}  // namespace panelkit
