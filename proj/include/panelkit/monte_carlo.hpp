#pragma once

#include <string>
#include <vector>

#include "panelkit/adf.hpp"
#include "panelkit/coint.hpp"
#include "panelkit/dgp.hpp"

namespace panelkit {

// Parameters forwarded to the test under study.
struct McStageParams {
  int bandwidth = 3;
  int aug_lags = 1;
  int dh_lags = 2;
  CointDeterministic pedroni_det = CointDeterministic::MeansAndTrends;
  Deterministic adf_det = Deterministic::Intercept;
};

struct McResult {
  std::string test;
  int reps = 0;
  int errors = 0;  // replications that raised, reported, never dropped
  double nominal = 0.05;
  std::vector<std::string> statistic_names;
  std::vector<double> rejection_rates;  // over the successful replications
  std::vector<double> binomial_se;
  int threads = 1;
};

// Runs `test` in {"kao", "pedroni", "dh", "adf"} on reps independent draws
// from the DGP (substream seeds derived from dgp.seed, so results are
// identical for any execution order or thread count). Rejections use each
// statistic's canonical one-sided region for the coint tests (panel v right
// tail, everything else left), the two-sided normal region for the DH
// aggregates, and the Dickey-Fuller critical values for adf. The dependent
// is the DGP's first variable, the regressors the rest; dh tests
// cause = first regressor -> effect = dependent.
McResult monte_carlo(const std::string& test, const DgpSpec& dgp, int reps,
                     double nominal, const McStageParams& params = {},
                     int threads = 1);

}  // namespace panelkit
