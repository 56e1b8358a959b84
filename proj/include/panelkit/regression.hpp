#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>
#include <string>
#include <vector>

namespace panelkit {

// Output of a least-squares fit. t_stats[j] = coefficients[j] /
// standard_errors[j]; dof = n_obs - n_params.
struct RegressionFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd t_stats;
  Eigen::VectorXd residuals;
  double rss = 0.0;
  int dof = 0;
  std::vector<std::string> design_columns;
  Eigen::MatrixXd xtx_inverse;  // (X'X)^{-1}, kept for Wald-type tests

  double s2() const { return rss / dof; }
};

// Least squares of y on X, optionally prepending a constant column.
// Solved by rank-revealing column-pivoted QR; throws RankDeficientError when
// the effective rank at relative tolerance 1e-10 is below the column count,
// and TooFewObservationsError when rows <= columns.
RegressionFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                  bool intercept,
                  std::vector<std::string> column_names = {});

// Column-wise demeaning, in place.
void demean_columns(Eigen::MatrixXd& X);
void demean(Eigen::VectorXd& x);

// LDLT factorization of a symmetric positive-definite moment matrix with a
// numerical rank check; throws RankDeficientError when a pivot falls below
// 1e-12 of the largest.
Eigen::LDLT<Eigen::MatrixXd> spd_factor(const Eigen::MatrixXd& A,
                                        const char* context);

}  // namespace panelkit
