#include "panelkit/lrv.hpp"

#include "panelkit/errors.hpp"

namespace panelkit {

LrvEstimate long_run_variance(const Eigen::MatrixXd& u_in, int bandwidth,
                              bool demean) {
  if (u_in.rows() == 0)
    throw EmptySequenceError("long_run_variance: empty sequence");
  if (bandwidth < 0)
    throw NegativeBandwidthError("long_run_variance: bandwidth < 0");

  Eigen::MatrixXd u = u_in;
  if (demean) u.rowwise() -= u.colwise().mean();

  const Eigen::Index T = u.rows(), m = u.cols();
  LrvEstimate est;
  est.bandwidth = bandwidth;
  est.Sigma = (u.transpose() * u) / static_cast<double>(T);
  est.Lambda = Eigen::MatrixXd::Zero(m, m);
  for (int j = 1; j <= bandwidth && j < T; ++j) {
    const double w = 1.0 - static_cast<double>(j) / (bandwidth + 1);
    // G_j = T^{-1} sum_{t=j+1..T} u_t u_{t-j}'
    Eigen::MatrixXd Gj = (u.bottomRows(T - j).transpose() * u.topRows(T - j)) /
                         static_cast<double>(T);
    est.Lambda += w * Gj;
  }
  est.Omega = est.Sigma + est.Lambda + est.Lambda.transpose();
  return est;
}

LrvEstimate long_run_variance(const Eigen::VectorXd& u, int bandwidth,
                              bool demean) {
  return long_run_variance(Eigen::MatrixXd(u), bandwidth, demean);
}

}  // namespace panelkit
