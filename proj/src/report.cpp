#include "panelkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "panelkit/errors.hpp"
#include "panelkit/stats.hpp"

namespace panelkit {

namespace {

using json = nlohmann::ordered_json;

std::string fmt4(double x) {
  if (std::isnan(x)) return "n/a";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string coef_z(double coef, double z) {
  const std::string st = stars(normal_p_two_sided(z));
  return fmt4(coef) + st + " (" + fmt4(z) + ")";
}

json json_value(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

const char* kStarsNote = "* p < 0.1, ** p < 0.05, *** p < 0.01";

json descriptive_json(const DescriptiveTable& t) {
  json doc;
  doc["stage"] = "descriptive";
  doc["variables"] = t.variables;
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["group"] = r.group;
    row["mean"] = r.mean;
    row["sd"] = r.sd;
    row["n_obs"] = r.n_obs;
    rows.push_back(row);
  }
  doc["rows"] = rows;
  return doc;
}

json unit_roots_json(const UnitRootTable& t) {
  json doc;
  doc["stage"] = "unit_roots";
  doc["note"] =
      "descriptive pretesting: per-entity ADF t statistics and their "
      "cross-entity average, levels and first differences";
  doc["aug_lags"] = t.aug_lags;
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"variable", r.variable},
                    {"entity", r.entity},
                    {"level_t", json_value(r.level_stat)},
                    {"diff_t", json_value(r.diff_stat)}});
  }
  doc["rows"] = rows;
  return doc;
}

json coint_json(const CointReport& r, const std::string& stage) {
  json doc;
  doc["stage"] = stage;
  doc["test_family"] = r.test_family;
  doc["n_panels"] = r.n_panels;
  doc["n_periods_used"] = r.n_periods_used;
  doc["bandwidth"] = r.spec.bandwidth;
  doc["aug_lags"] = r.spec.aug_lags;
  doc["kernel"] = "bartlett";
  doc["deterministic"] =
      r.spec.deterministic == CointDeterministic::MeansAndTrends
          ? "panel means + panel-specific linear trends"
          : "panel means";
  if (r.single_entity_warning) doc["single_entity_warning"] = true;
  if (r.group_variants) doc["group_variants"] = true;
  json stats = json::array();
  for (const auto& s : r.statistics) {
    stats.push_back({{"name", s.name},
                     {"value", json_value(s.value)},
                     {"p_value", json_value(s.p_value)},
                     {"stars", stars(s.p_value)},
                     {"tail", s.tail == Tail::Left    ? "left"
                              : s.tail == Tail::Right ? "right"
                                                      : "two-sided"}});
  }
  doc["statistics"] = stats;
  return doc;
}

json dh_json(const std::vector<DhReport>& reports) {
  json doc;
  doc["stage"] = "dh";
  json tests = json::array();
  for (const auto& r : reports) {
    json t;
    t["cause"] = r.cause;
    t["effect"] = r.effect;
    t["lag_order"] = r.lag_order;
    t["n_panels"] = r.n_panels;
    t["t_used"] = r.t_used;
    t["w_bar"] = json_value(r.w_bar);
    t["z_bar"] = json_value(r.z_bar);
    t["z_bar_p"] = json_value(r.p_z_bar);
    t["z_bar_stars"] = stars(r.p_z_bar);
    t["z_bar_tilde"] = json_value(r.z_bar_tilde);
    t["z_bar_tilde_p"] = json_value(r.p_z_bar_tilde);
    t["z_bar_tilde_stars"] =
        std::isnan(r.p_z_bar_tilde) ? "" : stars(r.p_z_bar_tilde);
    t["wald_individual"] = r.wald_individual;
    if (r.any_degenerate) t["degenerate_regressor"] = true;
    tests.push_back(t);
  }
  doc["tests"] = tests;
  return doc;
}

json fmols_json(const std::optional<FmolsReport>& pooled,
                const std::optional<FmolsReport>& grouped) {
  json doc;
  doc["stage"] = "fmols";
  auto emit = [&](const FmolsReport& r) {
    json m;
    m["mode"] = r.mode == FmolsMode::Pooled ? "pooled" : "grouped";
    m["bandwidth"] = r.bandwidth;
    m["n_obs_used"] = r.n_obs_used;
    json rows = json::array();
    for (size_t j = 0; j < r.regressors.size(); ++j) {
      const double t = r.t_stats(static_cast<Eigen::Index>(j));
      const double p = normal_p_two_sided(t);
      rows.push_back({{"variable", r.regressors[j]},
                      {"coefficient",
                       json_value(r.coefficients(static_cast<Eigen::Index>(j)))},
                      {"t_stat", json_value(t)},
                      {"p_value", json_value(p)},
                      {"stars", stars(p)}});
    }
    m["coefficients"] = rows;
    json per = json::array();
    for (const auto& [entity, fit] : r.per_entity) {
      json pe;
      pe["entity"] = entity;
      json cs = json::array(), ts = json::array();
      for (Eigen::Index j = 0; j < fit.coefficients.size(); ++j) {
        cs.push_back(json_value(fit.coefficients(j)));
        ts.push_back(json_value(fit.t_stats(j)));
      }
      pe["coefficients"] = cs;
      pe["t_stats"] = ts;
      if (fit.zero_residual_variance) pe["zero_residual_variance"] = true;
      per.push_back(pe);
    }
    m["per_entity"] = per;
    return m;
  };
  if (pooled) doc["pooled"] = emit(*pooled);
  if (grouped) doc["grouped"] = emit(*grouped);
  return doc;
}

json pmg_json(const PmgFit& fit, const PmgTotals& totals) {
  json doc;
  doc["stage"] = "pmg";
  doc["converged"] = fit.converged;
  doc["iterations"] = fit.iterations;
  doc["loglik"] = json_value(fit.loglik);
  doc["gradient_norm"] = json_value(fit.grad_norm);
  doc["t_used"] = fit.t_used;
  json lr = json::array();
  for (size_t j = 0; j < fit.regressors.size(); ++j) {
    const double z = fit.theta_z(static_cast<Eigen::Index>(j));
    const double p = normal_p_two_sided(z);
    lr.push_back({{"variable", fit.regressors[j]},
                  {"coefficient",
                   json_value(fit.theta(static_cast<Eigen::Index>(j)))},
                  {"z_stat", json_value(z)},
                  {"p_value", json_value(p)},
                  {"stars", stars(p)}});
  }
  doc["long_run"] = lr;
  json total;
  total["names"] = totals.names;
  total["coefficients"] = totals.mean;
  total["z_stats"] = totals.z;
  doc["total"] = total;
  json per = json::array();
  for (const auto& e : fit.entities) {
    json pe;
    pe["entity"] = e.entity;
    pe["COINTEQ01"] = json_value(e.phi);
    pe["COINTEQ01_z"] = json_value(e.phi_z);
    json names = json::array(), cs = json::array(), zs = json::array();
    for (size_t j = 0; j < e.short_run_names.size(); ++j) {
      names.push_back(e.short_run_names[j]);
      cs.push_back(json_value(e.short_run(static_cast<Eigen::Index>(j))));
      zs.push_back(json_value(e.short_run_z(static_cast<Eigen::Index>(j))));
    }
    pe["short_run_names"] = names;
    pe["short_run"] = cs;
    pe["short_run_z"] = zs;
    pe["intercept"] = json_value(e.intercept);
    pe["sigma2"] = json_value(e.sigma2);
    if (e.non_stationary_adjustment) pe["non_stationary_adjustment"] = true;
    per.push_back(pe);
  }
  doc["per_entity"] = per;
  doc["loglik_path"] = fit.loglik_path;
  return doc;
}

json fe_json(const std::vector<FeEcmReport>& reports) {
  json doc;
  doc["stage"] = "fe_ecm";
  json cols = json::array();
  for (const auto& r : reports) {
    json c;
    c["time_fe"] = r.time_fe;
    c["n_obs"] = r.n_obs;
    c["se_type"] = r.se_type;
    json rows = json::array();
    for (size_t j = 0; j < r.columns.size(); ++j) {
      const double z = r.z_stats(static_cast<Eigen::Index>(j));
      const double p = normal_p_two_sided(z);
      rows.push_back(
          {{"variable", r.columns[j]},
           {"coefficient",
            json_value(r.coefficients(static_cast<Eigen::Index>(j)))},
           {"z_stat", json_value(z)},
           {"p_value", json_value(p)},
           {"stars", stars(p)}});
    }
    c["coefficients"] = rows;
    cols.push_back(c);
  }
  doc["columns"] = cols;
  return doc;
}

}  // namespace

DescriptiveTable describe(const Panel& panel,
                          const std::vector<std::string>& variable_order) {
  std::vector<std::string> order;
  for (const auto& v : variable_order)
    if (panel.has_variable(v)) order.push_back(v);
  for (const auto& v : panel.variables()) {
    bool seen = false;
    for (const auto& o : order) seen = seen || o == v;
    if (!seen) order.push_back(v);
  }

  DescriptiveTable table;
  table.variables = order;
  const int N = panel.n_entities(), T = panel.n_periods();

  auto stats_for = [&](const Eigen::VectorXd& x) {
    const double mean = x.mean();
    const double sd = x.size() > 1
                          ? std::sqrt((x.array() - mean).square().sum() /
                                      (x.size() - 1))
                          : 0.0;
    return std::make_pair(mean, sd);
  };

  DescriptiveTable::Row all;
  all.group = "All panels";
  all.n_obs = N * T;
  for (const auto& v : order) {
    Eigen::VectorXd pooled(static_cast<Eigen::Index>(N) * T);
    for (int e = 0; e < N; ++e)
      pooled.segment(e * T, T) = panel.series(e, panel.variable_index(v));
    const auto [m, s] = stats_for(pooled);
    all.mean.push_back(m);
    all.sd.push_back(s);
  }
  table.rows.push_back(std::move(all));

  for (int e = 0; e < N; ++e) {
    DescriptiveTable::Row row;
    row.group = panel.entities()[e];
    row.n_obs = T;
    for (const auto& v : order) {
      const auto [m, s] =
          stats_for(panel.series(e, panel.variable_index(v)));
      row.mean.push_back(m);
      row.sd.push_back(s);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

PmgTotals pmg_totals(const PmgFit& fit) {
  PmgTotals totals;
  if (fit.entities.empty()) return totals;
  const size_t ns = fit.entities.front().short_run_names.size();
  totals.names.push_back("COINTEQ01");
  for (size_t j = 0; j < ns; ++j)
    totals.names.push_back(fit.entities.front().short_run_names[j]);

  const double N = static_cast<double>(fit.entities.size());
  for (size_t j = 0; j < 1 + ns; ++j) {
    double sum = 0.0, sum2 = 0.0;
    for (const auto& e : fit.entities) {
      const double v =
          j == 0 ? e.phi : e.short_run(static_cast<Eigen::Index>(j - 1));
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / N;
    const double var = N > 1 ? (sum2 - N * mean * mean) / (N - 1) : 0.0;
    const double se = var > 0.0 ? std::sqrt(var / N) : 0.0;
    totals.mean.push_back(mean);
    totals.z.push_back(se > 0.0 ? mean / se : 0.0);
  }
  return totals;
}

std::string render_text(const ReportBundle& b) {
  std::ostringstream os;
  os << "================================================================\n";
  os << "panelkit report\n";
  os << "================================================================\n";

  if (b.descriptive) {
    const auto& t = *b.descriptive;
    os << "\n-- Descriptive statistics --------------------------------\n";
    os << "(first row: mean, second row: standard deviation)\n\n";
    os << "group           ";
    for (const auto& v : t.variables) os << " " << v;
    os << "  N\n";
    for (const auto& r : t.rows) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%-16s", r.group.c_str());
      os << buf;
      for (size_t j = 0; j < t.variables.size(); ++j)
        os << " " << fmt4(r.mean[j]);
      os << "  " << r.n_obs << "\n";
      os << "                ";
      for (size_t j = 0; j < t.variables.size(); ++j)
        os << " " << fmt4(r.sd[j]);
      os << "\n";
    }
  }

  if (b.unit_roots) {
    os << "\n-- Unit-root pretesting (descriptive) --------------------\n";
    os << "ADF t statistics, levels and first differences; aug lags "
       << b.unit_roots->aug_lags << "\n\n";
    os << "variable  entity      level t    diff t\n";
    for (const auto& r : b.unit_roots->rows) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-9s %-10s %9s %9s\n",
                    r.variable.c_str(), r.entity.c_str(),
                    fmt4(r.level_stat).c_str(), fmt4(r.diff_stat).c_str());
      os << buf;
    }
  }

  auto render_coint = [&](const CointReport& r, const char* title) {
    os << "\n-- " << title << " ----------------------------\n\n";
    for (const auto& s : r.statistics) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "  %-38s %10s%s\n", s.name.c_str(),
                    fmt4(s.value).c_str(), stars(s.p_value).c_str());
      os << buf;
    }
    os << "\n  Note: " << kStarsNote << ".\n";
    os << "  Panels: " << r.n_panels << ", periods used: "
       << r.n_periods_used << ". Kernel: Bartlett, lags "
       << r.spec.bandwidth << ", augmented lags " << r.spec.aug_lags
       << ".\n";
    os << "  Deterministics: "
       << (r.spec.deterministic == CointDeterministic::MeansAndTrends
               ? "panel means and panel-specific linear trends"
               : "panel means")
       << ".\n";
    if (r.single_entity_warning)
      os << "  Warning: single entity; panel asymptotics do not apply.\n";
  };
  if (b.kao) render_coint(*b.kao, "Kao cointegration test");
  if (b.pedroni) render_coint(*b.pedroni, "Pedroni cointegration test");

  if (!b.dh.empty()) {
    os << "\n-- Granger non-causality (heterogeneous panels) ----------\n";
    for (const auto& r : b.dh) {
      os << "\n  " << r.cause << " -> " << r.effect << " (lag order "
         << r.lag_order << ", panels " << r.n_panels << ", T used "
         << r.t_used << ")\n";
      os << "    W-bar       = " << fmt4(r.w_bar) << "\n";
      os << "    Z-bar       = " << fmt4(r.z_bar) << stars(r.p_z_bar)
         << "\n";
      os << "    Z-bar tilde = " << fmt4(r.z_bar_tilde)
         << (std::isnan(r.p_z_bar_tilde) ? "" : stars(r.p_z_bar_tilde))
         << "\n";
      if (r.any_degenerate)
        os << "    (degenerate regressor in at least one entity)\n";
    }
    os << "\n  Note: " << kStarsNote << ". Two-sided normal p-values.\n";
  }

  if (b.fmols_pooled || b.fmols_grouped) {
    os << "\n-- Panel FMOLS -------------------------------------------\n\n";
    const auto* any = b.fmols_pooled ? &*b.fmols_pooled : &*b.fmols_grouped;
    os << "  variable      pooled                 grouped\n";
    for (size_t j = 0; j < any->regressors.size(); ++j) {
      char buf[160];
      std::string pooled = "-", grouped = "-";
      if (b.fmols_pooled)
        pooled = coef_z(b.fmols_pooled->coefficients(j),
                        b.fmols_pooled->t_stats(j));
      if (b.fmols_grouped)
        grouped = coef_z(b.fmols_grouped->coefficients(j),
                         b.fmols_grouped->t_stats(j));
      std::snprintf(buf, sizeof buf, "  %-12s %-22s %-22s\n",
                    any->regressors[j].c_str(), pooled.c_str(),
                    grouped.c_str());
      os << buf;
    }
    os << "\n  Note: " << kStarsNote << "; t statistics in parentheses.\n";
    os << "  Bandwidth " << any->bandwidth << " (Bartlett), observations "
       << any->n_obs_used << ".\n";
  }

  if (b.pmg && b.pmg_total) {
    const auto& fit = *b.pmg;
    os << "\n-- Pooled Mean Group estimation --------------------------\n";
    os << "\n  Long-run coefficients:\n";
    for (size_t j = 0; j < fit.regressors.size(); ++j) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "    %-12s %s\n",
                    fit.regressors[j].c_str(),
                    coef_z(fit.theta(j), fit.theta_z(j)).c_str());
      os << buf;
    }
    os << "\n  Short-run coefficients (coefficient row, z row):\n\n";
    const auto& totals = *b.pmg_total;
    os << "    panel       ";
    for (const auto& n : totals.names) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %-14s", n.c_str());
      os << buf;
    }
    os << "\n";
    auto row_pair = [&](const std::string& label,
                        const std::vector<double>& cs,
                        const std::vector<double>& zs) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "    %-12s", label.c_str());
      os << buf;
      for (size_t j = 0; j < cs.size(); ++j) {
        std::snprintf(buf, sizeof buf, " %-14s",
                      (fmt4(cs[j]) + stars(normal_p_two_sided(zs[j])))
                          .c_str());
        os << buf;
      }
      os << "\n                ";
      for (size_t j = 0; j < zs.size(); ++j) {
        std::snprintf(buf, sizeof buf, " %-14s", fmt4(zs[j]).c_str());
        os << buf;
      }
      os << "\n";
    };
    row_pair("Total", totals.mean, totals.z);
    for (const auto& e : fit.entities) {
      std::vector<double> cs{e.phi}, zs{e.phi_z};
      for (Eigen::Index j = 0; j < e.short_run.size(); ++j) {
        cs.push_back(e.short_run(j));
        zs.push_back(e.short_run_z(j));
      }
      row_pair(e.entity, cs, zs);
    }
    os << "\n  Note: " << kStarsNote
       << ". COINTEQ01 is the error-correction speed.\n";
    os << "  Log-likelihood " << fmt4(fit.loglik) << ", iterations "
       << fit.iterations << (fit.converged ? "" : " (not converged)")
       << ", T used " << fit.t_used << ".\n";
    for (const auto& e : fit.entities)
      if (e.non_stationary_adjustment)
        os << "  Warning: " << e.entity
           << " adjustment speed outside (-2, 0].\n";
  }

  if (!b.fe_ecm.empty()) {
    os << "\n-- Fixed-effect error-correction regression ---------------\n\n";
    const auto& first = b.fe_ecm.front();
    os << "  variable        ";
    for (size_t c = 0; c < b.fe_ecm.size(); ++c) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%zu) D.%-18s", c + 1, "");
      os << buf;
    }
    os << "\n";
    for (size_t j = 0; j < first.columns.size(); ++j) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "  %-16s", first.columns[j].c_str());
      os << buf;
      for (const auto& col : b.fe_ecm) {
        std::snprintf(buf, sizeof buf, " %-24s",
                      coef_z(col.coefficients(j), col.z_stats(j)).c_str());
        os << buf;
      }
      os << "\n";
    }
    os << "  Time fixed-effect";
    for (const auto& col : b.fe_ecm) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %-24s", col.time_fe ? "Yes" : "No");
      os << buf;
    }
    os << "\n  N               ";
    for (const auto& col : b.fe_ecm) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %-24d", col.n_obs);
      os << buf;
    }
    os << "\n\n  Note: " << kStarsNote << "; z statistics in parentheses ("
       << first.se_type << " standard errors).\n";
    os << "  L. is the first lag and D. the first difference.\n";
  }

  if (!b.error_stage.empty()) {
    os << "\n-- ERROR --------------------------------------------------\n";
    os << "  stage '" << b.error_stage << "': " << b.error_message << "\n";
  }
  return os.str();
}

std::vector<std::string> write_bundle(const ReportBundle& b,
                                      const std::string& output_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(output_dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const json& doc) {
    const std::string path = (fs::path(output_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
    written.push_back(name);
  };

  if (b.descriptive) emit("descriptive.json", descriptive_json(*b.descriptive));
  if (b.unit_roots) emit("unit_roots.json", unit_roots_json(*b.unit_roots));
  if (b.kao) emit("kao.json", coint_json(*b.kao, "kao"));
  if (b.pedroni) emit("pedroni.json", coint_json(*b.pedroni, "pedroni"));
  if (!b.dh.empty()) emit("dh.json", dh_json(b.dh));
  if (b.fmols_pooled || b.fmols_grouped)
    emit("fmols.json", fmols_json(b.fmols_pooled, b.fmols_grouped));
  if (b.pmg && b.pmg_total) emit("pmg.json", pmg_json(*b.pmg, *b.pmg_total));
  if (!b.fe_ecm.empty()) emit("fe_ecm.json", fe_json(b.fe_ecm));

  const std::string path = (fs::path(output_dir) / "report.txt").string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << render_text(b);
  written.push_back("report.txt");
  return written;
}

}  // namespace panelkit
