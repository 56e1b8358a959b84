#include "panelkit/pedroni.hpp"

#include "panelkit/errors.hpp"

namespace panelkit {

namespace {

// Columns: mu_v, nu_v, mu_rho, nu_rho, mu_t, nu_t, mu_grho, nu_grho,
// mu_gt, nu_gt; one row per regressor count m = 1..7.
//
// These are the mean/variance adjustment terms of Pedroni (1999, Table 2)
// for the standardized statistics. The published table is reproduced here
// by direct simulation of the limiting Brownian functionals (see
// tools/limit_moments.cpp: T=2000, 250k replications per configuration,
// delta-method composition identical to the statistics' construction).
struct MomentRow {
  double mu_v, nu_v, mu_rho, nu_rho, mu_t, nu_t, mu_grho, nu_grho, mu_gt,
      nu_gt;
};

const MomentRow kMeans[7] = {
    {8.637502, 60.887729, -6.021881, 31.617874, -1.737013, 0.942009, -9.103494, 36.622112, -2.035609, 0.673571},  // m=1
    {11.759053, 104.287945, -9.543633, 57.757156, -2.188432, 0.971809, -13.004472, 52.167751, -2.465761, 0.625362},  // m=2
    {15.227319, 149.965980, -13.329831, 82.576288, -2.586949, 0.935607, -16.976096, 68.486303, -2.840055, 0.599470},  // m=3
    {18.902048, 191.637158, -17.183934, 101.755846, -2.939322, 0.868235, -20.900801, 83.223297, -3.169731, 0.574964},  // m=4
    {22.670872, 231.877231, -21.121562, 120.079078, -3.260070, 0.811643, -24.899878, 98.982606, -3.473341, 0.564307},  // m=5
    {26.500796, 268.227832, -25.029601, 137.449621, -3.550762, 0.774935, -28.847794, 114.893274, -3.749921, 0.558105},  // m=6
    {30.388283, 299.928619, -29.001717, 151.613405, -3.823495, 0.729179, -32.820169, 129.926951, -4.009214, 0.550952},  // m=7
};

const MomentRow kTrends[7] = {
    {17.907149, 122.403418, -10.572779, 44.361766, -2.302909, 0.677736, -13.686865, 51.466025, -2.540767, 0.572544},  // m=1
    {21.117346, 159.579648, -14.027993, 64.909175, -2.654473, 0.703819, -17.404507, 67.567651, -2.881478, 0.571308},  // m=2
    {24.509305, 197.872058, -17.649296, 85.472496, -2.978360, 0.712683, -21.191983, 83.033700, -3.193748, 0.564735},  // m=3
    {28.043555, 238.673635, -21.395446, 106.189972, -3.280968, 0.712318, -25.067795, 98.987134, -3.485864, 0.559224},  // m=4
    {31.699311, 277.117461, -25.268843, 124.103110, -3.567359, 0.694597, -28.996479, 114.352378, -3.760325, 0.551907},  // m=5
    {35.358773, 311.211719, -29.109657, 141.052352, -3.831281, 0.678219, -32.894020, 130.389056, -4.014654, 0.549672},  // m=6
    {39.159839, 346.281583, -32.996387, 158.595314, -4.080923, 0.667564, -36.794648, 145.386619, -4.254582, 0.545398},  // m=7
};

}  // namespace

LimitMoments pedroni_moments(CointDeterministic det, int n_regressors,
                             PedroniStat stat) {
  if (n_regressors < 1 || n_regressors > 7)
    throw InvalidParametersError(
        "pedroni_moments: tabulated for 1..7 regressors");
  const MomentRow& row =
      (det == CointDeterministic::MeansAndTrends ? kTrends
                                                 : kMeans)[n_regressors - 1];
  switch (stat) {
    case PedroniStat::PanelV:
      return {row.mu_v, row.nu_v};
    case PedroniStat::PanelRho:
      return {row.mu_rho, row.nu_rho};
    case PedroniStat::PanelT:
      return {row.mu_t, row.nu_t};
    case PedroniStat::GroupRho:
      return {row.mu_grho, row.nu_grho};
    case PedroniStat::GroupT:
      return {row.mu_gt, row.nu_gt};
  }
  throw InvalidParametersError("pedroni_moments: unknown statistic");
}

}  // namespace panelkit
