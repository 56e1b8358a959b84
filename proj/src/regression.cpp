#include "panelkit/regression.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "panelkit/errors.hpp"

namespace panelkit {

RegressionFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                  bool intercept, std::vector<std::string> column_names) {
  if (X.rows() != y.size())
    throw InvalidParametersError("ols: rows(X) != len(y)");
  Eigen::MatrixXd D;
  if (intercept) {
    D.resize(X.rows(), X.cols() + 1);
    D.col(0).setOnes();
    D.rightCols(X.cols()) = X;
  } else {
    D = X;
  }
  const Eigen::Index n = D.rows(), k = D.cols();
  if (n <= k)
    throw TooFewObservationsError("ols: need rows > cols (" +
                                  std::to_string(n) + " <= " +
                                  std::to_string(k) + ")");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(D);
  qr.setThreshold(1e-10);
  if (qr.rank() < k)
    throw RankDeficientError("ols: design matrix rank " +
                             std::to_string(qr.rank()) + " < " +
                             std::to_string(k));

  RegressionFit fit;
  fit.coefficients = qr.solve(y);
  fit.residuals = y - D * fit.coefficients;
  fit.rss = fit.residuals.squaredNorm();
  fit.dof = static_cast<int>(n - k);

  // (X'X)^{-1} = P R^{-1} R^{-T} P' from the pivoted QR factors.
  Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k)
                          .triangularView<Eigen::Upper>();
  Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(k, k));
  Eigen::MatrixXd inv_perm = Rinv * Rinv.transpose();
  const auto& P = qr.colsPermutation();
  fit.xtx_inverse = P * inv_perm * P.transpose();

  const double s2 = fit.rss / fit.dof;
  fit.standard_errors = (s2 * fit.xtx_inverse.diagonal()).cwiseMax(0.0)
                            .cwiseSqrt();
  fit.t_stats.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double se = fit.standard_errors(j), b = fit.coefficients(j);
    if (se > 0.0)
      fit.t_stats(j) = b / se;
    else
      fit.t_stats(j) = b == 0.0 ? 0.0
                                : std::copysign(
                                      std::numeric_limits<double>::infinity(),
                                      b);
  }

  if (intercept) column_names.insert(column_names.begin(), "const");
  if (static_cast<Eigen::Index>(column_names.size()) == k)
    fit.design_columns = std::move(column_names);
  else {
    fit.design_columns.resize(k);
    for (Eigen::Index j = 0; j < k; ++j)
      fit.design_columns[j] = "x" + std::to_string(j);
  }
  return fit;
}

void demean_columns(Eigen::MatrixXd& X) {
  X.rowwise() -= X.colwise().mean();
}

void demean(Eigen::VectorXd& x) { x.array() -= x.mean(); }

Eigen::LDLT<Eigen::MatrixXd> spd_factor(const Eigen::MatrixXd& A,
                                        const char* context) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
  bool ok = ldlt.info() == Eigen::Success;
  if (ok && A.rows() > 0) {
    const auto& D = ldlt.vectorD();
    const double dmax = D.maxCoeff();
    ok = dmax > 0.0 && D.minCoeff() > 1e-12 * dmax;
  }
  if (!ok)
    throw RankDeficientError(std::string(context) +
                             ": moment matrix is numerically singular");
  return ldlt;
}

}  // namespace panelkit
