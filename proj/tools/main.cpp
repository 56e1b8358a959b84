// panelkit command line: panel econometrics pipeline over long-format CSV.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "panelkit/config.hpp"
#include "panelkit/csv.hpp"
#include "panelkit/dgp.hpp"
#include "panelkit/errors.hpp"
#include "panelkit/monte_carlo.hpp"
#include "panelkit/pipeline.hpp"

using namespace panelkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;  // input or configuration error
constexpr int kExitStage = 3;  // stage computation error

struct CommonArgs {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

// Registers a flag that maps 1:1 onto a config key; values are applied on
// top of the config file, so flags always win.
void add_override(CLI::App* cmd, CommonArgs& args, const std::string& flag,
                  const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag,
      [&args, key](const std::string& v) {
        args.overrides.emplace_back(key, v);
      },
      help);
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("-c,--config", args.config_path,
                  "configuration file (key = value lines)");
  add_override(cmd, args, "-i,--input", "input", "input panel CSV");
  add_override(cmd, args, "-o,--output", "output", "output directory");
  add_override(cmd, args, "--log-vars", "log_vars",
               "columns to log-transform at ingest");
  add_override(cmd, args, "--annual-inst", "annual_inst",
               "annual entity,year,value CSV for the institution score");
  add_override(cmd, args, "--dependent", "dependent", "dependent variable");
  add_override(cmd, args, "--regressors", "regressors",
               "comma-separated regressors");
  add_override(cmd, args, "--bandwidth", "bandwidth",
               "Bartlett kernel lags");
  add_override(cmd, args, "--aug-lags", "aug_lags", "ADF augmentation lags");
}

PipelineConfig resolve_config(const CommonArgs& args) {
  PipelineConfig config;
  if (!args.config_path.empty())
    config = parse_config_file(args.config_path);
  for (const auto& [key, value] : args.overrides)
    apply_config_entry(config, key, value);
  return config;
}

int run_stages(const PipelineConfig& config,
               const std::vector<std::string>& stages) {
  PipelineConfig c = config;
  if (!stages.empty()) c.stages = stages;
  const Panel panel = ingest_from_config(c);
  const ReportBundle bundle = run_pipeline(panel, c);
  write_bundle(bundle, c.output_dir);
  std::cout << render_text(bundle);
  return bundle.error_stage.empty() ? kExitOk : kExitStage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"panel time-series econometrics toolkit"};
  app.require_subcommand(1);

  CommonArgs args;

  // ingest: parse, validate balance, print the panel shape.
  auto* ingest = app.add_subcommand(
      "ingest", "parse and validate a panel CSV, print its shape");
  add_common(ingest, args);

  auto* describe =
      app.add_subcommand("describe", "descriptive statistics table");
  add_common(describe, args);
  add_override(describe, args, "--unit-roots", "unit_roots",
               "include per-entity ADF pretesting (true/false)");

  auto* coint = app.add_subcommand(
      "coint", "panel cointegration tests (kao or pedroni)");
  std::string which_coint;
  coint->add_option("test", which_coint, "kao | pedroni")->required();
  add_common(coint, args);
  add_override(coint, args, "--trend", "pedroni_trend",
               "panel-specific linear trends (pedroni)");
  add_override(coint, args, "--group", "pedroni_group",
               "report the group-mean variants (pedroni)");

  auto* causality = app.add_subcommand(
      "causality", "Granger non-causality in heterogeneous panels");
  add_common(causality, args);
  add_override(causality, args, "--cause", "dh_cause", "cause variable");
  add_override(causality, args, "--effect", "dh_effect", "effect variable");
  add_override(causality, args, "--lags", "dh_lags", "lag order K");
  add_override(causality, args, "--both-directions", "dh_both_directions",
               "also test the reverse direction (true/false)");

  auto* fmols = app.add_subcommand(
      "fmols", "panel fully modified OLS (pooled and grouped)");
  add_common(fmols, args);

  auto* pmg = app.add_subcommand("pmg", "pooled mean group estimation");
  add_common(pmg, args);
  add_override(pmg, args, "--p", "pmg_p", "ARDL lags of the dependent");
  add_override(pmg, args, "--q", "pmg_q",
               "per-regressor lags, NAME:LAGS pairs");
  add_override(pmg, args, "--q-default", "pmg_q_default",
               "default regressor lag order");

  auto* ecm = app.add_subcommand(
      "ecm", "fixed-effect error-correction regression with the "
             "institution interaction");
  add_common(ecm, args);
  add_override(ecm, args, "--time-fe", "ecm_time_fe", "no | yes | both");
  add_override(ecm, args, "--cluster", "ecm_cluster",
               "cluster standard errors by entity (true/false)");
  add_override(ecm, args, "--flow", "ecm_flow", "flow variable");
  add_override(ecm, args, "--inst", "inst_variable",
               "institution score variable");
  add_override(ecm, args, "--controls", "ecm_controls",
               "control variables");
  add_override(ecm, args, "--extra", "ecm_extra",
               "extra regressors for robustness passes");

  auto* pipeline = app.add_subcommand(
      "pipeline", "run every configured stage in the canonical order");
  add_common(pipeline, args);
  add_override(pipeline, args, "--stages", "stages",
               "comma-separated stage list");
  add_override(pipeline, args, "--unit-roots", "unit_roots",
               "include unit-root pretesting (true/false)");

  // simulate: synthetic panel generation.
  auto* simulate =
      app.add_subcommand("simulate", "generate a synthetic panel CSV");
  std::string sim_family = "independent-random-walks", sim_out = "panel.csv";
  std::string sim_names, sim_theta;
  DgpSpec sim;
  simulate->add_option("--family", sim_family,
                       "independent-random-walks | cointegrated-homogeneous "
                       "| cointegrated-heterogeneous | ecm-pmg | causal-var");
  simulate->add_option("--n", sim.n_entities, "entities");
  simulate->add_option("--t", sim.n_periods, "periods");
  simulate->add_option("--seed", sim.seed, "seed");
  simulate->add_option("--regressors", sim.n_regressors, "regressor count");
  simulate->add_option("--beta", sim.beta, "long-run slope");
  simulate->add_option("--beta-spread", sim.beta_spread,
                       "slope heterogeneity half-width");
  simulate->add_option("--noise-sd", sim.noise_sd, "innovation sd");
  simulate->add_option("--error-rho", sim.error_rho,
                       "AR(1) of the equilibrium error");
  simulate->add_option("--trends", sim.entity_trends, "entity trends");
  simulate->add_option("--theta", sim_theta,
                       "long-run vector for ecm-pmg, comma separated");
  simulate->add_option("--phi-min", sim.phi_min, "slowest adjustment");
  simulate->add_option("--phi-max", sim.phi_max, "fastest adjustment");
  simulate->add_option("--var-causal", sim.var_causal,
                       "cause -> effect coefficient (causal-var)");
  simulate->add_option("--var-self", sim.var_self,
                       "effect AR coefficient (causal-var)");
  simulate->add_option("--names", sim_names,
                       "variable names, dependent first");
  simulate->add_option("--out", sim_out, "output CSV path");

  // validate: Monte Carlo size/power studies.
  auto* validate = app.add_subcommand(
      "validate", "Monte Carlo rejection-rate study for a test");
  std::string val_test = "kao", val_family = "independent-random-walks";
  int val_reps = 2000, val_threads = 1, val_dh_lags = 2;
  double val_nominal = 0.05;
  DgpSpec val;
  McStageParams val_params;
  bool val_pedroni_means = false;
  validate->add_option("--test", val_test, "kao | pedroni | dh | adf");
  validate->add_option("--family", val_family, "DGP family");
  validate->add_option("--n", val.n_entities, "entities");
  validate->add_option("--t", val.n_periods, "periods");
  validate->add_option("--seed", val.seed, "seed");
  validate->add_option("--regressors", val.n_regressors, "regressor count");
  validate->add_option("--beta", val.beta, "long-run slope");
  validate->add_option("--beta-spread", val.beta_spread, "slope spread");
  validate->add_option("--noise-sd", val.noise_sd, "innovation sd");
  validate->add_option("--error-rho", val.error_rho, "equilibrium error AR");
  validate->add_option("--trends", val.entity_trends, "entity trends");
  validate->add_option("--var-causal", val.var_causal, "causal coefficient");
  validate->add_option("--var-self", val.var_self, "effect AR coefficient");
  validate->add_option("--reps", val_reps, "replications (>= 100)");
  validate->add_option("--nominal", val_nominal, "nominal level");
  validate->add_option("--threads", val_threads, "worker threads");
  validate->add_option("--bandwidth", val_params.bandwidth, "kernel lags");
  validate->add_option("--aug-lags", val_params.aug_lags,
                       "ADF augmentation lags");
  validate->add_option("--dh-lags", val_dh_lags, "DH lag order");
  validate->add_flag("--pedroni-means", val_pedroni_means,
                     "pedroni without trends");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      const PipelineConfig config = resolve_config(args);
      const Panel panel = ingest_from_config(config);
      std::cout << "balanced panel: " << panel.n_entities()
                << " entities x " << panel.n_periods() << " quarters ("
                << panel.periods().front().str() << ".."
                << panel.periods().back().str() << "), "
                << panel.n_variables() << " variables\n";
      std::cout << "entities:";
      for (const auto& e : panel.entities()) std::cout << " " << e;
      std::cout << "\nvariables:";
      for (const auto& v : panel.variables()) std::cout << " " << v;
      std::cout << "\nobservations per variable: "
                << panel.n_entities() * panel.n_periods() << "\n";
      return kExitOk;
    }
    if (describe->parsed())
      return run_stages(resolve_config(args), {"describe"});
    if (coint->parsed()) {
      if (which_coint != "kao" && which_coint != "pedroni")
        throw InvalidParametersError("coint: test must be kao or pedroni");
      return run_stages(resolve_config(args), {which_coint});
    }
    if (causality->parsed())
      return run_stages(resolve_config(args), {"dh"});
    if (fmols->parsed()) return run_stages(resolve_config(args), {"fmols"});
    if (pmg->parsed()) return run_stages(resolve_config(args), {"pmg"});
    if (ecm->parsed()) return run_stages(resolve_config(args), {"ecm"});
    if (pipeline->parsed()) {
      const PipelineConfig config = resolve_config(args);
      return run_stages(config, config.stages);
    }
    if (simulate->parsed()) {
      sim.family = dgp_family_from_string(sim_family);
      if (!sim_names.empty()) sim.variable_names = split_list(sim_names);
      if (!sim_theta.empty()) {
        sim.theta.clear();
        for (const auto& s : split_list(sim_theta))
          sim.theta.push_back(std::stod(s));
      }
      const Panel panel = synth_dgp(sim);
      write_panel_csv(panel, sim_out);
      std::cout << "wrote " << sim_out << " (" << panel.n_entities()
                << " x " << panel.n_periods() << ", "
                << panel.n_variables() << " variables, family "
                << dgp_family_to_string(sim.family) << ", seed " << sim.seed
                << ")\n";
      return kExitOk;
    }
    if (validate->parsed()) {
      val.family = dgp_family_from_string(val_family);
      val_params.dh_lags = val_dh_lags;
      val_params.pedroni_det = val_pedroni_means
                                   ? CointDeterministic::Means
                                   : CointDeterministic::MeansAndTrends;
      const McResult res = monte_carlo(val_test, val, val_reps, val_nominal,
                                       val_params, val_threads);
      std::printf("test %s on %s: %d reps (%d errored), nominal %.3f\n",
                  res.test.c_str(), dgp_family_to_string(val.family).c_str(),
                  res.reps, res.errors, res.nominal);
      for (size_t j = 0; j < res.statistic_names.size(); ++j)
        std::printf("  %-38s rejection %.4f (se %.4f)\n",
                    res.statistic_names[j].c_str(), res.rejection_rates[j],
                    res.binomial_se[j]);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidParametersError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitInput;
  } catch (const MissingCellError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DuplicateCellError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GapInPeriodsError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const MissingYearError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NonPositiveForLogError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  }
  return kExitOk;
}
