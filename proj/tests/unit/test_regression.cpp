#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "helpers.hpp"
#include "panelkit/adf.hpp"
#include "panelkit/errors.hpp"
#include "panelkit/lrv.hpp"
#include "panelkit/regression.hpp"
#include "panelkit/rng.hpp"
#include "panelkit/stats.hpp"

using namespace panelkit;

TEST_CASE("ols: exact single-column fit") {
  Eigen::VectorXd y(3), x(3);
  y << 1, 2, 3;
  x << 1, 2, 3;
  const RegressionFit fit = ols(y, x, false);
  CHECK(fit.coefficients(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fit.residuals.cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("ols: intercept-only fit returns the mean") {
  Eigen::VectorXd y = Eigen::VectorXd::Constant(10, 4.25);
  const RegressionFit fit = ols(y, Eigen::MatrixXd(10, 0), true);
  CHECK(fit.coefficients(0) == doctest::Approx(4.25).epsilon(1e-15));
  CHECK(fit.rss == doctest::Approx(0.0));
}

TEST_CASE("ols matches the normal-equations oracle") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 50, k = 3;
    Eigen::MatrixXd X(n, k);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) X(i, j) = rng.gaussian();
      y(i) = 1.5 * X(i, 0) - 0.7 * X(i, 2) + rng.gaussian();
    }
    const RegressionFit fit = ols(y, X, true);
    Eigen::MatrixXd D(n, k + 1);
    D.col(0).setOnes();
    D.rightCols(k) = X;
    const Eigen::VectorXd oracle =
        (D.transpose() * D).inverse() * (D.transpose() * y);
    CHECK((fit.coefficients - oracle).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((D.transpose() * fit.residuals).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("ols: scale equivariance") {
  Rng rng(5);
  Eigen::MatrixXd X(40, 2);
  Eigen::VectorXd y(40);
  for (int i = 0; i < 40; ++i) {
    X(i, 0) = rng.gaussian();
    X(i, 1) = rng.gaussian();
    y(i) = X(i, 0) - X(i, 1) + 0.3 * rng.gaussian();
  }
  const RegressionFit base = ols(y, X, true);
  const double c = 37.5;
  const RegressionFit scaled = ols((c * y).eval(), X, true);
  CHECK((scaled.coefficients - c * base.coefficients).cwiseAbs().maxCoeff() <
        1e-9);
  CHECK((scaled.residuals - c * base.residuals).cwiseAbs().maxCoeff() <
        1e-9);
  CHECK((scaled.t_stats - base.t_stats).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ols: error paths") {
  Eigen::VectorXd y(3);
  y << 1, 2, 3;
  CHECK_THROWS_AS(ols(y, Eigen::MatrixXd::Random(3, 3), true),
                  TooFewObservationsError);
  Eigen::MatrixXd collinear(10, 2);
  for (int i = 0; i < 10; ++i) {
    collinear(i, 0) = i;
    collinear(i, 1) = 2.0 * i;
  }
  Eigen::VectorXd yy = Eigen::VectorXd::LinSpaced(10, 0, 9);
  CHECK_THROWS_AS(ols(yy, collinear, false), RankDeficientError);
}

TEST_CASE("adf with no augmentation reduces to the plain DF regression") {
  Rng rng(17);
  Eigen::VectorXd x(60);
  x(0) = rng.gaussian();
  for (int i = 1; i < 60; ++i) x(i) = 0.8 * x(i - 1) + rng.gaussian();

  const AdfResult res = adf_test(x, 0, Deterministic::Intercept);

  // Same regression assembled by hand through ols.
  const int n = 59;
  Eigen::VectorXd dy(n);
  Eigen::MatrixXd X(n, 1);
  for (int i = 0; i < n; ++i) {
    dy(i) = x(i + 1) - x(i);
    X(i, 0) = x(i);
  }
  const RegressionFit fit = ols(dy, X, true);
  CHECK(res.statistic == doctest::Approx(fit.t_stats(1)).epsilon(1e-14));
  CHECK(res.rho == doctest::Approx(1.0 + fit.coefficients(1)).epsilon(1e-14));
  CHECK(res.n_used == n);
}

TEST_CASE("adf statistic is invariant to positive scaling") {
  Rng rng(23);
  Eigen::VectorXd x(80);
  x(0) = 0.0;
  for (int i = 1; i < 80; ++i) x(i) = x(i - 1) + rng.gaussian();
  for (const auto det : {Deterministic::None, Deterministic::Intercept,
                         Deterministic::InterceptTrend}) {
    const double a = adf_test(x, 2, det).statistic;
    const double b = adf_test((1234.5 * x).eval(), 2, det).statistic;
    CHECK(std::fabs(a - b) < 1e-10);
  }
}

TEST_CASE("adf: monte carlo size and power (smoke)") {
  int reject_null = 0, reject_alt = 0;
  const int reps = 200;
  for (int r = 0; r < reps; ++r) {
    Rng rng(substream_seed(1000, r));
    Eigen::VectorXd rw(200), ar(200);
    rw(0) = rng.gaussian();
    ar(0) = rng.gaussian();
    for (int i = 1; i < 200; ++i) {
      rw(i) = rw(i - 1) + rng.gaussian();
      ar(i) = 0.2 * ar(i - 1) + rng.gaussian();
    }
    if (adf_test(rw, 0, Deterministic::Intercept).statistic <
        adf_critical_value(Deterministic::Intercept, 0.05))
      ++reject_null;
    if (adf_test(ar, 0, Deterministic::Intercept).statistic <
        adf_critical_value(Deterministic::Intercept, 0.01))
      ++reject_alt;
  }
  CHECK(reject_null <= reps / 10);       // does not reject in >= 90%
  CHECK(reject_alt >= reps * 95 / 100);  // rejects at 1% in >= 95%
}

TEST_CASE("adf: too short") {
  Eigen::VectorXd x(5);
  x << 1, 2, 1, 2, 1;
  CHECK_THROWS_AS(adf_test(x, 2, Deterministic::Intercept),
                  SequenceTooShortError);
}

TEST_CASE("long_run_variance: bandwidth 0 degenerates to sigma2") {
  Rng rng(31);
  Eigen::VectorXd u(500);
  for (int i = 0; i < 500; ++i) u(i) = rng.gaussian();
  const LrvEstimate est = long_run_variance(u, 0, true);
  CHECK(est.omega2() == est.sigma2());
  CHECK(est.lambda() == 0.0);
}

TEST_CASE("long_run_variance: scalar identity omega = sigma + 2 lambda") {
  Rng rng(37);
  Eigen::VectorXd u(300);
  u(0) = rng.gaussian();
  for (int i = 1; i < 300; ++i) u(i) = 0.5 * u(i - 1) + rng.gaussian();
  const LrvEstimate est = long_run_variance(u, 8, true);
  CHECK(est.omega2() ==
        doctest::Approx(est.sigma2() + 2.0 * est.lambda()).epsilon(1e-12));
}

TEST_CASE("long_run_variance: closed forms") {
  Rng rng(41);
  const int T = 10000;
  Eigen::VectorXd wn(T), ma(T);
  double prev = rng.gaussian();
  wn(0) = prev;
  ma(0) = prev;
  for (int i = 1; i < T; ++i) {
    const double e = rng.gaussian();
    wn(i) = e;
    ma(i) = e + 0.5 * prev;
    prev = e;
  }
  CHECK(long_run_variance(wn, 3, true).omega2() ==
        doctest::Approx(1.0).epsilon(0.1));
  CHECK(long_run_variance(ma, 20, true).omega2() ==
        doctest::Approx(2.25).epsilon(0.07));
}

TEST_CASE("long_run_variance: bartlett omega is nonnegative, PSD matrix") {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(substream_seed(400, trial));
    const int T = 20 + static_cast<int>(rng.uniform() * 80);
    const int bw = static_cast<int>(rng.uniform() * 10);
    Eigen::MatrixXd u(T, 2);
    for (int i = 0; i < T; ++i) {
      u(i, 0) = rng.gaussian();
      u(i, 1) = 0.7 * u(i, 0) + rng.gaussian() + 0.1;
    }
    const LrvEstimate est = long_run_variance(u, bw, true);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(est.Omega);
    CHECK(es.eigenvalues().minCoeff() > -1e-10 * est.Omega.norm());
  }
}

TEST_CASE("long_run_variance: errors") {
  CHECK_THROWS_AS(long_run_variance(Eigen::MatrixXd(0, 1), 2),
                  EmptySequenceError);
  CHECK_THROWS_AS(long_run_variance(Eigen::VectorXd::Ones(10).eval(), -1),
                  NegativeBandwidthError);
}

TEST_CASE("normal and chi-square helpers") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(-1.959963985) == doctest::Approx(0.025).epsilon(1e-6));
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963985).epsilon(1e-9));
  CHECK(normal_quantile(0.05) == doctest::Approx(-1.644853627).epsilon(1e-9));
  CHECK(chi2_cdf(3.841458821, 1) == doctest::Approx(0.95).epsilon(1e-9));
  CHECK(chi2_quantile(0.95, 2) == doctest::Approx(5.991464547).epsilon(1e-8));
  CHECK(stars(0.005) == "***");
  CHECK(stars(0.03) == "**");
  CHECK(stars(0.07) == "*");
  CHECK(stars(0.2) == "");
}
