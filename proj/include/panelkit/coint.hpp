#pragma once

#include <string>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {

enum class VectorHomogeneity { SameForAll, PanelSpecific };
enum class CointDeterministic { Means, MeansAndTrends };

// Rejection region of a standardized statistic.
enum class Tail { Left, Right, TwoSided };

struct CointSpec {
  std::string dependent;
  std::vector<std::string> regressors;
  VectorHomogeneity homogeneity = VectorHomogeneity::SameForAll;
  CointDeterministic deterministic = CointDeterministic::Means;
  int bandwidth = 3;  // Bartlett kernel lags, the tables' "Lags are 3.0"
  int aug_lags = 1;   // augmentation lags for the ADF-type statistics
};

struct CointStatistic {
  std::string name;
  double value = 0.0;
  double p_value = 1.0;  // display convention; see each test's docs
  Tail tail = Tail::Left;
};

struct CointReport {
  std::string test_family;  // "Kao" or "Pedroni"
  std::vector<CointStatistic> statistics;
  int n_panels = 0;
  int n_periods_used = 0;
  CointSpec spec;
  bool single_entity_warning = false;
  bool group_variants = false;
};

}  // namespace panelkit
