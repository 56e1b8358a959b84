// Regenerates the bundled synthetic fixture: a 6-entity x 41-quarter panel
// shaped like the house-price application (variables HP, FLOW, INCOME,
// INTEREST, EXRATE, STOCKPRICE plus an annual INST score). The panel comes
// from the ecm-pmg generator, each series is then mapped to a realistic
// location/scale (an affine map preserves the error-correction structure),
// and the log variables are exponentiated so the CSV carries index levels
// that the pipeline logs back at ingest.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "panelkit/csv.hpp"
#include "panelkit/dgp.hpp"
#include "panelkit/rng.hpp"

using namespace panelkit;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";

  DgpSpec spec;
  spec.family = DgpSpec::Family::EcmPmg;
  spec.n_entities = 6;
  spec.n_periods = 41;  // 2009Q1 .. 2019Q1
  spec.seed = 424242;
  spec.n_regressors = 5;
  spec.theta = {0.25, 0.30, 0.10, 0.15, 0.20};
  spec.noise_sd = 0.15;
  spec.phi_min = -0.45;
  spec.phi_max = -0.12;
  spec.intercept = 0.0;
  spec.start = Quarter{2009, 1};
  spec.variable_names = {"HP", "FLOW", "INCOME", "INTEREST", "EXRATE",
                         "STOCKPRICE"};
  const Panel raw = synth_dgp(spec);

  // Location/scale per variable, then exp() for the log variables so the
  // file carries positive index levels; INTEREST stays a rate.
  struct Map {
    const char* name;
    double loc, scale;
    bool logged;
  };
  const std::vector<Map> maps = {
      {"HP", 4.70, 0.040, true},        {"FLOW", 7.50, 0.300, true},
      {"INCOME", 11.20, 0.080, true},   {"INTEREST", 0.07, 0.0030, false},
      {"EXRATE", 3.50, 0.150, true},    {"STOCKPRICE", 7.30, 0.120, true},
  };

  std::vector<PanelRecord> records;
  for (int e = 0; e < raw.n_entities(); ++e)
    for (int t = 0; t < raw.n_periods(); ++t)
      for (const auto& m : maps) {
        double v = m.loc +
                   m.scale * raw.value(e, t, raw.variable_index(m.name));
        if (m.name == std::string("INTEREST")) v = std::max(v, 0.005);
        if (m.logged) v = std::exp(v);
        records.push_back({raw.entities()[e], raw.periods()[t], m.name, v});
      }
  const Panel panel = Panel::build(records);
  write_panel_csv(panel, dir + "/housing_panel.csv");

  // Annual institution scores: per-entity base level with a slow drift.
  std::ofstream inst(dir + "/inst_annual.csv");
  inst << "entity,year,value\n";
  for (int e = 0; e < panel.n_entities(); ++e) {
    Rng rng(substream_seed(777, static_cast<uint64_t>(e)));
    double score = 52.0 + 6.0 * e;
    for (int year = 2009; year <= 2019; ++year) {
      score += 0.4 + 0.8 * rng.gaussian();
      score = std::clamp(score, 40.0, 92.0);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", score);
      inst << panel.entities()[e] << "," << year << "," << buf << "\n";
    }
  }
  std::printf("wrote %s/housing_panel.csv and %s/inst_annual.csv\n",
              dir.c_str(), dir.c_str());
  return 0;
}
