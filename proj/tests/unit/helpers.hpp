#pragma once

#include <functional>
#include <string>
#include <vector>

#include "panelkit/panel.hpp"
#include "panelkit/rng.hpp"

namespace testutil {

// Builds a balanced panel with entities E1..EN from 2009Q1 and values
// value(e, t, v).
inline panelkit::Panel make_panel(
    int n_entities, int n_periods, const std::vector<std::string>& vars,
    const std::function<double(int, int, int)>& value) {
  std::vector<panelkit::PanelRecord> records;
  panelkit::Quarter q0{2009, 1};
  for (int e = 0; e < n_entities; ++e) {
    panelkit::Quarter q = q0;
    for (int t = 0; t < n_periods; ++t) {
      for (size_t v = 0; v < vars.size(); ++v)
        records.push_back({"E" + std::to_string(e + 1), q, vars[v],
                           value(e, t, static_cast<int>(v))});
      q = q.next();
    }
  }
  return panelkit::Panel::build(records);
}

inline panelkit::Panel random_walk_panel(int n, int t, int vars,
                                         uint64_t seed) {
  std::vector<std::vector<double>> paths;
  panelkit::Rng rng(seed);
  paths.resize(static_cast<size_t>(n) * vars);
  for (auto& p : paths) {
    double x = rng.gaussian();
    for (int i = 0; i < t; ++i) {
      p.push_back(x);
      x += rng.gaussian();
    }
  }
  std::vector<std::string> names;
  for (int v = 0; v < vars; ++v) names.push_back("V" + std::to_string(v));
  return make_panel(n, t, names, [&](int e, int tt, int v) {
    return paths[static_cast<size_t>(e) * vars + v][tt];
  });
}

}  // namespace testutil
